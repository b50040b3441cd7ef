"""Generalized ear decompositions and the invariants phi*, mu* and s.

A decomposition of a connected graph is a sequence of walks (paths, cycles
or repetitive edges) covering all vertices: the first walk is closed and
every later walk meets the earlier ones exactly in its endpoints.  We only
consider odd-beginning decompositions (first walk an odd cycle); phi* is
the minimum possible number of even walks, minimized independently on each
connected component.

Only vertex coverage is required.  Leftover edges could always be appended
as walks of length 1, which are odd and change nothing; that equivalence is
asserted in the test suite rather than assumed silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    Graph,
    connected_components,
    induced_subgraph,

    is_dominating,
    is_strongly_non_bipartite,
    odd_cycles,
)


@dataclass(frozen=True)
class Walk:
    """A walk without repeated vertices except possibly first = last."""

    vertices: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if len(vs) < 2:
            raise ValueError("walk needs at least one edge")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"({a},{b}) is not an edge")
        body = vs[:-1] if self.closed else vs
        if len(set(body)) != len(body):
            raise ValueError("repeated vertex inside walk")


@dataclass(frozen=True)
class EarDecomposition:
    """Witness sequence of walks realizing phi* on one connected component."""

    walks: tuple[Walk, ...]

    @property
    def even_walk_count(self) -> int:
        return sum(1 for w in self.walks if w.is_even)

    @property
    def covered_vertices(self) -> frozenset[int]:
        return frozenset(v for w in self.walks for v in w.vertices)

    def validate(self, g: Graph) -> None:
        """Check every defining invariant against the carrier graph."""
        if not self.walks:
            raise ValueError("empty decomposition")
        first = self.walks[0]
        first.validate(g)
        if not first.closed:
            raise ValueError("first walk must be closed")
        if first.length % 2 == 0 or first.length < 3:
            raise ValueError("first walk must be an odd cycle")
        covered = set(first.vertices)
        for w in self.walks[1:]:
            w.validate(g)
            ends = {w.vertices[0], w.vertices[-1]}
            if not ends <= covered:
                raise ValueError("walk endpoints must lie in earlier walks")
            inner = set(w.interior())
            if inner & covered:
                raise ValueError("walk interior revisits earlier walks")
            covered |= inner
        comp = next(c for c in connected_components(g) if first.vertices[0] in c)
        if covered != comp:
            raise ValueError("walks do not cover the component")


def _component_phi(g: Graph, comp: frozenset[int]) -> tuple[int, EarDecomposition]:
    sub = induced_subgraph(g, comp)
    seeds = sorted(odd_cycles(sub), key=lambda c: (len(c), c))
    if not seeds:
        raise ValueError("component has no odd cycle")
    adj = sub.adjacency

    @lru_cache(maxsize=None)
    def solve(covered: frozenset[int]):
        """(even walks still needed, chosen extension path or None)."""
        if covered == comp:
            return 0, None
        uncovered = comp - covered
        # every simple path in the uncovered part whose two ends can attach
        # to covered vertices becomes one candidate walk; its parity depends
        # only on the number of new vertices, so one path per vertex set is
        # enough for the optimum
        options: dict[frozenset[int], tuple[int, ...]] = {}

        def paths(path: list[int]):
            if adj[path[-1]] & covered:
                key = frozenset(path)
                if key not in options:
                    options[key] = tuple(path)
            for w in sorted(adj[path[-1]] & uncovered):
                if w not in path:
                    path.append(w)
                    paths(path)
                    path.pop()

        for v in sorted(uncovered):
            if adj[v] & covered:
                paths([v])
        best = None
        for newset, path in sorted(options.items(), key=lambda kv: kv[1]):
            cost = 1 if len(newset) % 2 == 1 else 0  # walk length = |new|+1
            sub_cost, _ = solve(covered | newset)
            cand = cost + sub_cost
            if best is None or cand < best[0]:
                best = (cand, path)
        if best is None:
            raise ValueError("cannot extend coverage")  # unreachable: connected
        return best

    best_seed = None
    for cyc in seeds:
        cost, _ = solve(frozenset(cyc))
        if best_seed is None or cost < best_seed[0]:
            best_seed = (cost, cyc)
    phi, cyc = best_seed
    walks = [Walk(cyc + (cyc[0],))]
    covered = frozenset(cyc)
    while covered != comp:
        _, path = solve(covered)
        a = min(adj[path[0]] & covered)
        b = min(adj[path[-1]] & covered)
        walks.append(Walk((a,) + path + (b,)))
        covered |= frozenset(path)
    return phi, EarDecomposition(tuple(walks))


@lru_cache(maxsize=None)
def phi_star(g: Graph) -> tuple[int, tuple[EarDecomposition, ...]]:
    """Minimum even-walk count over odd-beginning decompositions, summed over
    components, with one optimal witness per component."""
    if not is_strongly_non_bipartite(g):
        raise ValueError("phi* requires a strongly non-bipartite graph")
    total = 0
    witnesses = []
    for comp in connected_components(g):
        phi, wit = _component_phi(g, comp)
        total += phi
        witnesses.append(wit)
    return total, tuple(witnesses)


def mu_star(g: Graph) -> int:
    """(phi*(g) + n - c) / 2 where c is the number of components."""
    phi, _ = phi_star(g)
    c = len(connected_components(g))
    num = phi + g.n - c
    assert num % 2 == 0, "phi* + n - c must be even"
    return num // 2


@lru_cache(maxsize=None)
def s_invariant_or_none(g: Graph):
    """(s, minimizing U) over dominating U with strongly non-bipartite induced
    subgraph, or None when no such U exists (e.g. bipartite input)."""
    verts = sorted(g.vertices)
    best = None
    for mask in range(1, 1 << len(verts)):
        u = frozenset(v for i, v in enumerate(verts) if mask >> i & 1)
        if not is_dominating(g, u):
            continue
        sub = induced_subgraph(g, u)
        if not is_strongly_non_bipartite(sub):
            continue
        key = (mu_star(sub), tuple(sorted(u)))
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return best[0], frozenset(best[1])


def s_invariant(g: Graph) -> tuple[int, frozenset[int]]:
    """Least mu*(g_U) over dominating U inducing a strongly non-bipartite
    subgraph, with one minimizing U."""
    res = s_invariant_or_none(g)
    if res is None:
        raise ValueError("no dominating strongly non-bipartite induced subgraph")
    return res


def mu_star_extension_bound_check(g: Graph, u, v: int) -> bool:
    """mu*(g_{U+v}) <= mu*(g_U) + 1 for v adjacent to U (one-vertex extension)."""
    u = frozenset(u)
    sub = induced_subgraph(g, u)
    if not is_strongly_non_bipartite(sub):
        raise ValueError("induced subgraph must be strongly non-bipartite")
    if v in u or not (g.adjacency[v] & u):
        raise ValueError("v must be a new vertex adjacent to U")
    return mu_star(induced_subgraph(g, u | {v})) <= mu_star(sub) + 1
