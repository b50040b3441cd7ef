"""Graph input/output and small-graph catalogs.

Supports the graph6 format (one graph per line, 6-bit packed upper
triangle) and a plain edge-list format, plus generation of all small
connected graphs from the networkx atlas.
"""

from __future__ import annotations

import warnings
from pathlib import Path

import networkx as nx

from .graphs import Graph, is_bipartite, is_connected


class CatalogError(ValueError):
    """Raised for malformed graph input, with the offending location."""


def decode_graph6(line: str) -> Graph:
    """Decode one graph6 line into a graph on vertices 1..n.

    The format: byte n+63 gives the order (n <= 62 supported here); the
    remaining bytes pack the upper triangle of the adjacency matrix,
    column by column, six bits per byte, each byte offset by 63.
    """
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<") :]
    if not line:
        raise CatalogError("empty graph6 line")
    first = ord(line[0]) - 63
    if first < 0 or first > 62:
        raise CatalogError(f"unsupported graph6 order byte {line[0]!r}")
    n = first
    bits = []
    for ch in line[1:]:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise CatalogError(f"invalid graph6 byte {ch!r}")
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise CatalogError("graph6 line too short for its order")
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges, allow_isolated=True)


def encode_graph6(g: Graph) -> str:
    """Inverse of decode_graph6 for graphs on up to 62 vertices."""
    n = g.n
    if n > 62:
        raise CatalogError("graph6 encoding supported only for n <= 62")
    order = {v: i + 1 for i, v in enumerate(sorted(g.vertices))}
    adj = {(order[u], order[v]) for u, v in g.edges}
    bits = []
    for j in range(2, n + 1):
        for i in range(1, j):
            bits.append(1 if (i, j) in adj or (j, i) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v".  Loops and out-of-range
    vertices are errors reported with their line number."""
    lines = text.splitlines()
    rows = [
        (i + 1, ln.strip()) for i, ln in enumerate(lines)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not rows:
        raise CatalogError("empty edge-list input")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise CatalogError(f"line {lineno}: expected header 'n m'")
    n, m = int(parts[0]), int(parts[1])
    if len(rows) - 1 != m:
        raise CatalogError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise CatalogError(f"line {lineno}: expected edge 'u v'")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise CatalogError(f"line {lineno}: loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise CatalogError(f"line {lineno}: vertex out of range 1..{n}")
        edges.append((u, v))
    return Graph.from_edges(n, edges, allow_isolated=True)


def _strip_isolated(g: Graph, label: str):
    """Drop isolated vertices (warning) and relabel to 1..n; None if no
    vertices remain."""
    kept = sorted(v for v in g.vertices if g.adjacency[v])
    if not kept:
        warnings.warn(f"{label}: no edges, skipped")
        return None
    if len(kept) < g.n:
        warnings.warn(f"{label}: dropped {g.n - len(kept)} isolated vertices")
    relabel = {v: i + 1 for i, v in enumerate(kept)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges]
    return Graph.from_edges(len(kept), edges)


def ingest_catalog(path: str | Path, format: str = "graph6") -> list[Graph]:
    """Read a file of graphs, skipping isolated-vertex-only entries with a
    warning.  format is 'graph6' (one graph per line) or 'edgelist' (one
    graph per file)."""
    path = Path(path)
    text = path.read_text()
    graphs = []
    if format == "graph6":
        for i, line in enumerate(text.splitlines()):
            if not line.strip():
                continue
            g = _strip_isolated(decode_graph6(line), f"{path.name}:{i + 1}")
            if g is not None:
                graphs.append(g)
    elif format == "edgelist":
        g = _strip_isolated(parse_edgelist(text), path.name)
        if g is not None:
            graphs.append(g)
    else:
        raise CatalogError(f"unknown format {format!r}")
    return graphs


def _from_networkx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes)
    relabel = {v: i + 1 for i, v in enumerate(nodes)}
    return Graph.from_edges(
        len(nodes), [(relabel[u], relabel[v]) for u, v in h.edges]
    )


def connected_catalog(
    n_min: int = 2, n_max: int = 6, non_bipartite_only: bool = False
) -> list[Graph]:
    """All connected graphs with n_min <= n <= n_max vertices (n_max <= 7),
    from the networkx atlas.  Single vertices carry no edges and are
    excluded by the n_min default."""
    if n_max > 7:
        raise CatalogError("atlas catalog covers n <= 7 only")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < n_min or n > n_max or h.number_of_edges() == 0:
            continue
        if not nx.is_connected(h):
            continue
        g = _from_networkx(h)
        assert is_connected(g)
        if non_bipartite_only and is_bipartite(g)[0]:
            continue
        out.append(g)
    return out
