"""Depth classification of edge ideal powers and symbolic powers.

Classes per exponent t:

* ZERO  -- some dominating set U induces a strongly non-bipartite subgraph
           with mu* below t (depth-zero criterion);
* ONE   -- not ZERO, but the first local cohomology is nonzero, decided by
           the two-condition criterion: a vertex whose deletion localizes to
           a depth-zero quotient, or a disconnected degree complex at some
           exponent vector in {0..t}^n (complete by cap invariance);
* GEQ2  -- neither.

The disconnected-degree-complex search runs as a vectorized scan over the
whole exponent box: a complex is disconnected exactly when the 1-skeleton on
its vertex faces is, so only singleton and pair faces are tabulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, reduce
from itertools import combinations

import numpy as np

from .graphs import (
    Graph,
    closed_neighborhood,
    induced_subgraph,
    is_connected,
    maximal_independent_sets,
)
from .ears import s_invariant_or_none
from .ideals import edge_ideal, power, symbolic_power_generators, _index_edges
from .homology import depth_oracle, DEFAULT_PRIME

_BOX_LIMIT = 60_000_000


class Classification(Enum):
    ZERO = "ZERO"
    ONE = "ONE"
    GEQ2 = "GEQ2"


@dataclass(frozen=True)
class DepthClass:
    classification: Classification
    exact_depth: int | None = None
    witness: dict | None = None


@dataclass(frozen=True)
class DepthProfile:
    graph: Graph
    t_max: int
    ordinary: tuple[DepthClass, ...]
    symbolic: tuple[DepthClass, ...] | None


def depth_zero(g: Graph, t: int) -> tuple[bool, frozenset[int] | None]:
    """Depth-zero test: t exceeds s(g); returns the minimizing dominating set."""
    if t < 1:
        raise ValueError("t must be >= 1")
    info = s_invariant_or_none(g)
    if info is not None and info[0] < t:
        return True, info[1]
    return False, None


def localized_depth_zero(g: Graph, v: int, t: int) -> bool:
    """Depth-zero of the quotient after inverting x_v, reduced to the induced
    graph on V minus N[v].  The degenerate case N[v] = V is the caller's."""
    rest = g.vertex_set - closed_neighborhood(g, v)
    if not rest:
        return False
    return depth_zero(induced_subgraph(g, rest), t)[0]


@lru_cache(maxsize=None)
def _capped_matching_box(g: Graph, t: int) -> np.ndarray:
    """min(max b-matching size, t) over capacities in {0..t}^n (int8)."""
    n = g.n
    if (t + 1) ** n > _BOX_LIMIT:
        raise MemoryError(f"exponent box (t+1)^n = {(t + 1) ** n} too large")
    edges = _index_edges(g)
    m = np.zeros((t + 1,) * n, dtype=np.int8)
    for _ in range(t):
        new = m.copy()
        for i, j in edges:
            src = tuple(
                slice(0, t) if ax in (i, j) else slice(None) for ax in range(n)
            )
            dst = tuple(
                slice(1, t + 1) if ax in (i, j) else slice(None) for ax in range(n)
            )
            np.maximum(new[dst], m[src] + 1, out=new[dst])
        m = new
    return m


def _lex_least_true(arr: np.ndarray):
    if not arr.any():
        return None
    flat = int(np.argmax(arr))  # C order scans the box lexicographically
    return tuple(int(x) for x in np.unravel_index(flat, arr.shape))


def _skeleton_disconnection(vface, pface, n: int) -> np.ndarray:
    """Boolean array over the box: some split (A, B) of the carrier has
    vertex faces on both sides and no pair face crossing it."""
    shape = None
    for f in vface:
        shape = np.broadcast_shapes(shape, f.shape) if shape else f.shape
    disc = np.zeros(shape, dtype=bool)
    false = np.zeros(shape, dtype=bool)
    for bits in range(1 << (n - 1)):
        a_side = {0} | {i for i in range(1, n) if bits >> (i - 1) & 1}
        if len(a_side) == n:
            continue
        any_a = reduce(np.logical_or, (vface[i] for i in a_side), false)
        any_b = reduce(
            np.logical_or, (vface[i] for i in range(n) if i not in a_side), false
        )
        cross = reduce(
            np.logical_or,
            (
                pface[(i, j)]
                for i, j in pface
                if (i in a_side) != (j in a_side)
            ),
            false,
        )
        disc |= any_a & any_b & ~cross
    return disc


def h1_disconnecting_vector(g: Graph, t: int):
    """Lexicographically least a in {0..t}^n with a disconnected degree
    complex of I^t, or None.  Vectorized over the whole box."""
    n = g.n
    m = _capped_matching_box(g, t)

    def raised(axes):
        arr = m
        for ax in sorted(axes, reverse=True):
            arr = arr.take(t, axis=ax)
        for ax in sorted(axes):
            arr = np.expand_dims(arr, axis=ax)
        return arr < t

    vface = [raised([i]) for i in range(n)]
    pface = {(i, j): raised([i, j]) for i, j in combinations(range(n), 2)}
    return _lex_least_true(_skeleton_disconnection(vface, pface, n))


def symbolic_disconnecting_vector(g: Graph, t: int):
    """Like :func:`h1_disconnecting_vector` for the symbolic power I^(t),
    using the facet law: facets are maximal independent sets F with the
    exponents outside F summing below t."""
    n = g.n
    if (t + 1) ** n > _BOX_LIMIT:
        raise MemoryError(f"exponent box (t+1)^n = {(t + 1) ** n} too large")
    verts = sorted(g.vertices)
    grids = np.ogrid[tuple(slice(0, t + 1) for _ in range(n))]
    active = []
    mis = maximal_independent_sets(g)
    for F in mis:
        outside = [i for i, v in enumerate(verts) if v not in F]
        sums = sum((grids[i] for i in outside), np.zeros((1,) * n, dtype=np.int16))
        active.append(sums < t)
    # vertex/pair faces of the complex generated by the active facets
    vface = [
        reduce(
            np.logical_or,
            (act for F, act in zip(mis, active) if verts[i] in F),
            np.zeros((1,) * n, dtype=bool),
        )
        for i in range(n)
    ]
    pface = {
        (i, j): reduce(
            np.logical_or,
            (
                act
                for F, act in zip(mis, active)
                if verts[i] in F and verts[j] in F
            ),
            np.zeros((1,) * n, dtype=bool),
        )
        for i, j in combinations(range(n), 2)
    }
    return _lex_least_true(_skeleton_disconnection(vface, pface, n))


def h1_nonzero(g: Graph, t: int) -> tuple[bool, dict | None]:
    """First local cohomology of R/I^t nonzero, with a machine-checkable
    witness: a qualifying vertex or a disconnecting exponent vector."""
    if t < 1:
        raise ValueError("t must be >= 1")
    for v in sorted(g.vertices):
        if closed_neighborhood(g, v) == g.vertex_set:
            return True, {"kind": "maximal_neighborhood", "v": v}
        if localized_depth_zero(g, v, t):
            return True, {"kind": "localized_vertex", "v": v}
    a = h1_disconnecting_vector(g, t)
    if a is not None:
        return True, {"kind": "disconnecting_vector", "a": a}
    return False, None


def symbolic_depth_one(g: Graph, t: int) -> tuple[bool, dict | None]:
    """depth R/I^(t) = 1, equivalent to nonvanishing first local cohomology
    since symbolic powers have positive depth."""
    if not is_connected(g):
        raise ValueError("symbolic depth test requires a connected graph")
    if t < 1:
        raise ValueError("t must be >= 1")
    for v in sorted(g.vertices):
        if closed_neighborhood(g, v) == g.vertex_set:
            return True, {"kind": "maximal_neighborhood", "v": v}
    a = symbolic_disconnecting_vector(g, t)
    if a is not None:
        return True, {"kind": "disconnecting_vector", "a": a}
    return False, None


def _classify_ordinary(g: Graph, t: int) -> DepthClass:
    zero, u = depth_zero(g, t)
    if zero:
        return DepthClass(Classification.ZERO, None, {"dominating_set": u})
    one, wit = h1_nonzero(g, t)
    if one:
        return DepthClass(Classification.ONE, None, wit)
    return DepthClass(Classification.GEQ2)


def _classify_symbolic(g: Graph, t: int) -> DepthClass:
    one, wit = symbolic_depth_one(g, t)
    if one:
        return DepthClass(Classification.ONE, None, wit)
    return DepthClass(Classification.GEQ2)


def _with_exact(cls: DepthClass, depth: int) -> DepthClass:
    table = {
        Classification.ZERO: depth == 0,
        Classification.ONE: depth == 1,
        Classification.GEQ2: depth >= 2,
    }
    assert table[cls.classification], (
        f"engine classified {cls.classification.value} but oracle depth is {depth}"
    )
    return DepthClass(cls.classification, depth, cls.witness)


def depth_profile(
    g: Graph,
    t_max: int,
    with_oracle: bool = False,
    include_symbolic: bool = True,
    prime: int = DEFAULT_PRIME,
) -> DepthProfile:
    """Per-t classification for I^t and I^(t), t = 1..t_max.

    With the oracle enabled, every class is cross-checked against the
    Betti-number depth and annotated with the exact value.
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    ordinary = []
    for t in range(1, t_max + 1):
        cls = _classify_ordinary(g, t)
        if with_oracle:
            cls = _with_exact(cls, depth_oracle(power(edge_ideal(g), t), prime))
        ordinary.append(cls)
    symbolic = None
    if include_symbolic and is_connected(g):
        symbolic = []
        for t in range(1, t_max + 1):
            cls = _classify_symbolic(g, t)
            if with_oracle:
                cls = _with_exact(
                    cls, depth_oracle(symbolic_power_generators(g, t), prime)
                )
            symbolic.append(cls)
        symbolic = tuple(symbolic)
    return DepthProfile(g, t_max, tuple(ordinary), symbolic)
