"""Simple undirected graphs on labeled vertices and the predicates used
by the depth criteria: domination, bipartiteness, independent sets,
complements and odd-cycle enumeration.

Vertex labels are positive integers.  Graphs built with :meth:`Graph.from_edges`
must have contiguous labels 1..n and no isolated vertices; induced subgraphs
and complements may carry isolated vertices and keep their original labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

INFINITE = math.inf


def _norm_edge(u, v):
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph; hashable, safe to share across workers."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @staticmethod
    def from_edges(n: int, edges, allow_isolated: bool = False) -> "Graph":
        """Build a graph on vertices 1..n from an iterable of pairs."""
        if n < 1:
            raise ValueError("need at least one vertex")
        es = frozenset(_norm_edge(u, v) for u, v in edges)
        for u, v in es:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
        g = Graph(tuple(range(1, n + 1)), es)
        if not allow_isolated and g.isolated_vertices:
            raise ValueError(f"isolated vertices {sorted(g.isolated_vertices)}")
        return g

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def isolated_vertices(self) -> frozenset[int]:
        return frozenset(v for v, nb in self.adjacency.items() if not nb)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"Graph(V={list(self.vertices)}, E={sorted(map(tuple, map(sorted, self.edges)))})"


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """N(v), the open neighborhood."""
    return g.adjacency[v]


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """N[v] = N(v) + v."""
    return g.adjacency[v] | {v}


def induced_subgraph(g: Graph, u) -> Graph:
    """Induced subgraph on the nonempty vertex set ``u`` (labels kept).

    The result may contain isolated vertices even when ``g`` does not.
    """
    u = frozenset(u)
    if not u:
        raise ValueError("empty vertex set")
    if not u <= g.vertex_set:
        raise ValueError(f"{sorted(u - g.vertex_set)} not vertices of the graph")
    edges = frozenset(e for e in g.edges if e[0] in u and e[1] in u)
    return Graph(tuple(sorted(u)), edges)


@lru_cache(maxsize=None)
def connected_components(g: Graph) -> tuple[frozenset[int], ...]:
    seen: set[int] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


@lru_cache(maxsize=None)
def is_bipartite(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """2-colorability; on failure also returns one odd closed walk found by BFS.

    The witness is a vertex sequence of an odd cycle (first = last omitted).
    """
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        queue = [start]
        while queue:
            v = queue.pop(0)
            for w in g.adjacency[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return False, _odd_cycle_from_conflict(parent, v, w)
    return True, None


def _odd_cycle_from_conflict(parent, v, w):
    # walk both BFS-tree branches up to the least common ancestor
    pv, pw = [v], [w]
    seen = {v: 0}
    x = v
    while parent[x] is not None:
        x = parent[x]
        seen[x] = len(pv)
        pv.append(x)
    x = w
    while x not in seen:
        x = parent[x]
        pw.append(x)
    cycle = pv[: seen[x] + 1] + pw[-2::-1]
    return tuple(cycle)


def is_strongly_non_bipartite(g: Graph) -> bool:
    """True iff every connected component contains an odd cycle."""
    if g.isolated_vertices:
        return False
    for comp in connected_components(g):
        ok, _ = is_bipartite(induced_subgraph(g, comp))
        if ok:
            return False
    return True


def is_dominating(g: Graph, u) -> bool:
    """True iff every vertex outside ``u`` has a neighbor in ``u``."""
    u = frozenset(u)
    if not u <= g.vertex_set:
        raise ValueError("dominating-set candidate not a vertex subset")
    return all(g.adjacency[v] & u for v in g.vertices if v not in u)


@lru_cache(maxsize=None)
def maximal_independent_sets(g: Graph) -> tuple[frozenset[int], ...]:
    """All inclusion-maximal independent sets, sorted by their vertex tuples.

    Bron-Kerbosch with pivoting on the complement adjacency (an independent
    set of g is a clique of the complement).
    """
    nonadj = {v: g.vertex_set - g.adjacency[v] - {v} for v in g.vertices}
    out: list[frozenset[int]] = []

    def extend(r: set, p: set, x: set):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(p & nonadj[v]))
        for v in sorted(p - nonadj[pivot]):
            extend(r | {v}, p & nonadj[v], x & nonadj[v])
            p.remove(v)
            x.add(v)

    extend(set(), set(g.vertices), set())
    return tuple(sorted(out, key=lambda s: tuple(sorted(s))))


def is_independent(g: Graph, u) -> bool:
    u = frozenset(u)
    return all(not g.has_edge(a, b) for a, b in combinations(sorted(u), 2))


@lru_cache(maxsize=None)
def disjoint_connected_mis_pair(g: Graph):
    """A pair (F, G) of disjoint maximal independent sets whose union induces
    a connected subgraph, minimizing |F|+|G| (ties: lexicographic), or None.
    """
    mis = maximal_independent_sets(g)
    best = None
    for f, h in combinations(mis, 2):
        if f & h:
            continue
        if not is_connected(induced_subgraph(g, f | h)):
            continue
        a, b = sorted((tuple(sorted(f)), tuple(sorted(h))))
        key = (len(f) + len(h), a, b)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return frozenset(best[1]), frozenset(best[2])


def complement_graph(g: Graph) -> Graph:
    """The graph of non-edges on the same vertex set (isolated vertices allowed)."""
    edges = frozenset(
        (u, v) for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)
    )
    return Graph(g.vertices, edges)


def complement_diameter(g: Graph):
    """diam of the complement; INFINITE when the complement is disconnected.

    INFINITE compares greater than any integer, so threshold tests like
    ``complement_diameter(g) >= 3`` stay total.
    """
    gc = complement_graph(g)
    if len(connected_components(gc)) > 1:
        return INFINITE
    diam = 0
    for src in gc.vertices:
        dist = {src: 0}
        queue = [src]
        while queue:
            v = queue.pop(0)
            for w in gc.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        diam = max(diam, max(dist.values()))
    return diam


@lru_cache(maxsize=None)
def simple_cycles(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All simple cycles, each listed once up to rotation and reflection.

    A cycle is reported as the vertex sequence starting at its smallest
    vertex, with the smaller of the two neighbors second.  Exhaustive DFS,
    intended for small graphs.
    """
    cycles: list[tuple[int, ...]] = []

    def dfs(path: list[int], used: set[int]):
        start, last = path[0], path[-1]
        for w in sorted(g.adjacency[last]):
            if w == start and len(path) >= 3 and path[1] < last:
                cycles.append(tuple(path))
            elif w > start and w not in used:
                path.append(w)
                used.add(w)
                dfs(path, used)
                used.remove(w)
                path.pop()

    for s in g.vertices:
        dfs([s], {s})
    return tuple(sorted(cycles, key=lambda c: (len(c), c)))


def odd_cycles(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All simple odd cycles (vertex sequences)."""
    return tuple(c for c in simple_cycles(g) if len(c) % 2 == 1)


def is_dominating_cycle(g: Graph, cycle) -> bool:
    return is_dominating(g, frozenset(cycle))


def has_only_dominating_odd_cycles(g: Graph) -> bool:
    return all(is_dominating_cycle(g, c) for c in odd_cycles(g))
