"""Degree complexes of monomial ideals and the facet laws for symbolic
powers of edge ideals.

A simplicial complex is stored by its facets over the carrier 1..n.  The
void complex (no faces at all) and the irrelevant complex (only the empty
face) are distinguished: the former has no facets, the latter has the empty
facet.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, is_connected, maximal_independent_sets
from .ideals import (
    MonomialIdeal,
    Monomial,
    edge_ideal,
    localized_membership,
    power,
    symbolic_power_generators,
    vertex_cover_prime,
)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[frozenset[int], ...]

    @staticmethod
    def make(n: int, facets) -> "SimplicialComplex":
        fs = [frozenset(f) for f in facets]
        maximal = [
            f for f in fs if not any(f < g for g in fs)
        ]
        uniq = sorted(set(maximal), key=lambda f: (len(f), tuple(sorted(f))))
        return SimplicialComplex(n, tuple(uniq))

    @staticmethod
    def void(n: int) -> "SimplicialComplex":
        return SimplicialComplex(n, ())

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (frozenset(),)

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            members = sorted(f)
            for k in range(len(members) + 1):
                out.update(frozenset(c) for c in combinations(members, k))
        return out

    def vertex_faces(self) -> frozenset[int]:
        return frozenset(v for f in self.facets for v in f)

    def dimension(self) -> int:
        """-2 for void, -1 for irrelevant."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1


def degree_complex(J: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """The complex of all F with x^a outside J localized at the F-variables.

    Faces are downward closed because shrinking F only removes inverted
    variables.  Facets are found top-down among all subsets (reference
    implementation; the engine uses vectorized scans for sweeps).
    """
    n = J.nvars
    facets: list[frozenset[int]] = []
    subsets = sorted(
        (frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)),
        key=len,
        reverse=True,
    )
    for f in subsets:
        if any(f <= g for g in facets):
            continue
        if not localized_membership(J, a, f):
            facets.append(f)
    return SimplicialComplex.make(n, facets)


def power_degree_complex(g: Graph, a: Monomial, t: int) -> SimplicialComplex:
    """Degree complex of I^t at a, via the b-matching membership test.

    F is a face iff x^a stays outside I^t after inverting the F-variables,
    i.e. no t edges fit under the capacities a with F uncapped.  Raising the
    F-coordinates to t is equivalent to uncapping, since t edges never use a
    vertex more than t times.  Avoids expanding the generators of I^t.
    """
    from itertools import combinations as _comb

    from .ideals import edge_power_membership

    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    facets: list[frozenset[int]] = []
    subsets = sorted(
        (frozenset(c) for k in range(g.n + 1) for c in _comb(g.vertices, k)),
        key=len,
        reverse=True,
    )
    for f in subsets:
        if any(f <= h for h in facets):
            continue
        raised = tuple(
            t if v in f else min(a[idx[v]], t) for v in sorted(g.vertices)
        )
        if not edge_power_membership(g, raised, t):
            facets.append(f)
    return SimplicialComplex.make(g.n, facets)


def is_disconnected(c: SimplicialComplex) -> bool:
    """Facet-overlap disconnectivity; complexes with fewer than two facets
    (including void and irrelevant) count as connected."""
    if len(c.facets) < 2:
        return False
    comp = set(c.facets[0])
    frontier = True
    rest = list(c.facets[1:])
    while frontier:
        frontier = False
        for f in list(rest):
            if f & comp:
                comp |= f
                rest.remove(f)
                frontier = True
    return bool(rest)


def symbolic_facets(g: Graph, a: Monomial, t: int) -> tuple[frozenset[int], ...]:
    """Facets of the degree complex of I^(t) at a: exactly the maximal
    independent sets whose complements pick up fewer than t exponents."""
    if t < 1:
        raise ValueError("t must be >= 1")
    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    out = []
    for F in maximal_independent_sets(g):
        if sum(a[idx[v]] for v in g.vertices if v not in F) < t:
            out.append(F)
    return tuple(sorted(out, key=lambda f: tuple(sorted(f))))


def symbolic_degree_complex(g: Graph, a: Monomial, t: int) -> SimplicialComplex:
    facets = symbolic_facets(g, a, t)
    return SimplicialComplex.make(g.n, facets)


def facet_prime_is_associated(g: Graph, t: int, F, cap: int | None = None) -> bool:
    """Audit that P_F is an associated prime of I^t by finding a monomial m
    with (I^t : m) = P_F inside the box {0..cap}^n.

    Exhausting the box is inconclusive and reported as False.
    """
    from itertools import product

    F = frozenset(F)
    cap = t if cap is None else cap
    J = power(edge_ideal(g), t)
    pf = vertex_cover_prime(g, F)
    outside = [v - 1 for v in g.vertices if v not in F]
    for m in product(range(cap + 1), repeat=g.n):
        if J.contains(m):
            continue
        ok = all(
            J.contains(tuple(e + (1 if i == j else 0) for i, e in enumerate(m)))
            for j in outside
        )
        if not ok:
            continue
        if J.colon_monomial(m) == pf:
            return True
    return False


def find_disconnecting_vector(g: Graph, F, G, t: int):
    """A vector a supported on F | G with both support sums equal to t-1
    making F and G the only facets of the degree complex of I^(t), or None.

    F, G must be disjoint maximal independent sets with connected union.
    """
    from itertools import combinations_with_replacement

    F, G = frozenset(F), frozenset(G)
    if F & G:
        raise ValueError("F and G must be disjoint")
    mis = set(maximal_independent_sets(g))
    if F not in mis or G not in mis:
        raise ValueError("F and G must be maximal independent sets")
    from .graphs import induced_subgraph

    if not is_connected(induced_subgraph(g, F | G)):
        raise ValueError("the union of F and G must induce a connected graph")
    if t < 1:
        raise ValueError("t must be >= 1")

    def distributions(verts):
        verts = sorted(verts)
        for combo in combinations_with_replacement(verts, t - 1):
            vec = dict.fromkeys(verts, 0)
            for v in combo:
                vec[v] += 1
            yield vec

    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    for fpart in distributions(F):
        for gpart in distributions(G):
            a = [0] * g.n
            for v, e in fpart.items():
                a[idx[v]] = e
            for v, e in gpart.items():
                a[idx[v]] = e
            a = tuple(a)
            if set(symbolic_facets(g, a, t)) == {F, G}:
                return a
    return None


def symbolic_power_ideal(g: Graph, t: int) -> MonomialIdeal:
    """Convenience re-export of the intersection construction."""
    return symbolic_power_generators(g, t)
