"""Monomial ideal arithmetic for edge ideals, their powers and symbolic
powers: membership, localization, colon, saturation and socle search.

Monomials are exponent tuples; variable i of the ambient ring corresponds
to vertex i of the graph (position i-1 in the tuple).  Generator lists are
always minimal and sorted, so equal ideals compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product

import numpy as np

from .graphs import Graph, maximal_independent_sets

Monomial = tuple[int, ...]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _minimalize(gens) -> tuple[Monomial, ...]:
    by_degree = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in by_degree:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its (unique) minimal sorted generators."""

    nvars: int
    gens: tuple[Monomial, ...]

    @staticmethod
    def make(nvars: int, gens) -> "MonomialIdeal":
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != nvars or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
            if not any(g):
                return MonomialIdeal(nvars, (tuple([0] * nvars),))  # unit ideal
        return MonomialIdeal(nvars, _minimalize(gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        gens = [mono_mul(a, b) for a in self.gens for b in other.gens]
        return MonomialIdeal.make(self.nvars, gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        gens = [mono_lcm(a, b) for a in self.gens for b in other.gens]
        return MonomialIdeal.make(self.nvars, gens)

    def colon_monomial(self, m: Monomial) -> "MonomialIdeal":
        gens = [tuple(max(e - f, 0) for e, f in zip(g, m)) for g in self.gens]
        return MonomialIdeal.make(self.nvars, gens)

    def max_exponents(self) -> Monomial:
        return tuple(max(g[i] for g in self.gens) for i in range(self.nvars))


def power(J: MonomialIdeal, t: int) -> MonomialIdeal:
    """Minimal generators of J^t, by iterated products with pruning."""
    if t < 1:
        raise ValueError("t must be >= 1")
    out = J
    for _ in range(t - 1):
        out = out.multiply(J)
    return out


def edge_ideal(g: Graph) -> MonomialIdeal:
    """The ideal generated by x_i x_j over the edges of g.

    Variables follow the sorted vertex list, so subgraph ideals live in a
    ring with one variable per remaining vertex.
    """
    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    gens = []
    for u, v in g.edges:
        e = [0] * g.n
        e[idx[u]] = 1
        e[idx[v]] = 1
        gens.append(tuple(e))
    return MonomialIdeal.make(g.n, gens)


@lru_cache(maxsize=None)
def _matching_under_caps(edges: tuple, caps: Monomial, limit: int) -> int:
    """Largest multiset of the given edges (index pairs, 0-based) whose
    vertex multiplicities stay below caps, truncated at limit."""
    if limit == 0:
        return 0
    best = 0
    for k, (i, j) in enumerate(edges):
        if caps[i] >= 1 and caps[j] >= 1:
            nxt = list(caps)
            nxt[i] -= 1
            nxt[j] -= 1
            # edges before k are never reused: multisets are enumerated in
            # nondecreasing edge order
            got = 1 + _matching_under_caps(edges[k:], tuple(nxt), limit - 1)
            best = max(best, got)
            if best >= limit:
                return limit
    return best


def _index_edges(g: Graph) -> tuple:
    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    return tuple(sorted((idx[u], idx[v]) for u, v in g.edges))


def edge_power_membership(g: Graph, a: Monomial, t: int) -> bool:
    """x^a in I^t, decided as a capacitated b-matching: t edges (repetition
    allowed) with vertex multiplicities bounded by a."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if t == 0:
        return True
    capped = tuple(min(e, t) for e in a)
    return _matching_under_caps(_index_edges(g), capped, t) >= t


def localized_membership(J: MonomialIdeal, a: Monomial, F) -> bool:
    """x^a in J R[x_i^{-1} | i in F]: some generator divides x^a after both
    are restricted to the variables outside F (1-based labels)."""
    free = [i for i in range(J.nvars) if (i + 1) not in F]
    return any(all(g[i] <= a[i] for i in free) for g in J.gens)


def symbolic_membership(g: Graph, a: Monomial, t: int) -> bool:
    """x^a in I^(t): for every maximal independent set F the exponents
    outside F sum to at least t (membership in P_F^t)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    for F in maximal_independent_sets(g):
        if sum(a[idx[v]] for v in g.vertices if v not in F) < t:
            return False
    return True


def vertex_cover_prime(g: Graph, F) -> MonomialIdeal:
    """P_F = (x_i | i not in F)."""
    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    gens = []
    for v in g.vertices:
        if v not in F:
            e = [0] * g.n
            e[idx[v]] = 1
            gens.append(tuple(e))
    return MonomialIdeal.make(g.n, gens)


@lru_cache(maxsize=None)
def symbolic_power_generators(g: Graph, t: int) -> MonomialIdeal:
    """I^(t) as the intersection of P_F^t over maximal independent sets F."""
    if t < 1:
        raise ValueError("t must be >= 1")
    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    out = None
    for F in maximal_independent_sets(g):
        comp = [idx[v] for v in g.vertices if v not in F]
        gens = []
        for combo in combinations_with_replacement(comp, t):
            e = [0] * g.n
            for i in combo:
                e[i] += 1
            gens.append(tuple(e))
        pft = MonomialIdeal.make(g.n, gens)
        out = pft if out is None else out.intersect(pft)
    assert out is not None
    for gen in out.gens:
        assert symbolic_membership(g, gen, t), f"generator {gen} fails membership"
    return out


def membership_table(J: MonomialIdeal, cap: int) -> np.ndarray:
    """Boolean array over the box {0..cap}^n: cell a is True iff x^a in J."""
    shape = (cap + 1,) * J.nvars
    table = np.zeros(shape, dtype=bool)
    for g in J.gens:
        if all(e <= cap for e in g):
            table[tuple(slice(e, None) for e in g)] = True
    return table


def socle_witness(J: MonomialIdeal, cap: int):
    """Lexicographically least a in {0..cap}^n with x^a outside J but
    x_i * x^a inside J for every i, or None if the box has none."""
    n = J.nvars
    if (cap + 2) ** n <= 4_000_000:
        table = membership_table(J, cap + 1)
        inner = tuple(slice(0, cap + 1) for _ in range(n))
        good = ~table[inner]
        for i in range(n):
            sl = tuple(
                slice(1, cap + 2) if j == i else slice(0, cap + 1) for j in range(n)
            )
            good &= table[sl]
        if not good.any():
            return None
        flat = int(np.argmax(good))  # C order = lexicographic order
        return tuple(int(x) for x in np.unravel_index(flat, good.shape))
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    for a in product(range(cap + 1), repeat=n):
        if not J.contains(a) and all(J.contains(mono_mul(a, e)) for e in unit):
            return a
    return None


def colon_by_variable(J: MonomialIdeal, i: int) -> MonomialIdeal:
    """J : x_i with i a 1-based variable index."""
    m = tuple(int(j == i - 1) for j in range(J.nvars))
    return J.colon_monomial(m)


def saturation(J: MonomialIdeal) -> MonomialIdeal:
    """J : m^infinity = the intersection over i of J : x_i^infinity, where
    each J : x_i^infinity is the colon-by-x_i fixpoint."""
    out = None
    for i in range(1, J.nvars + 1):
        cur = J
        while True:
            nxt = colon_by_variable(cur, i)
            if nxt == cur:
                break
            cur = nxt
        out = cur if out is None else out.intersect(cur)
    assert out is not None
    return out
