"""Command-line interface: per-graph analysis documents, depth profiles,
theorem checking, and catalog-wide conjecture searches.

Exit codes: 0 completed, 1 input error, 2 counterexample found.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from . import criteria
from .catalog import CatalogError, connected_catalog, decode_graph6, encode_graph6, parse_edgelist
from .complexes import is_disconnected, power_degree_complex
from .ears import mu_star, phi_star, s_invariant_or_none
from .engine import (
    Classification,
    depth_profile,
    depth_zero,
    h1_nonzero,
    localized_depth_zero,
)
from .graphs import (
    Graph,
    complement_diameter,
    is_bipartite,
    is_connected,
    is_dominating_cycle,
    is_strongly_non_bipartite,
    maximal_independent_sets,
    odd_cycles,
)
from .homology import DEFAULT_PRIME

SCHEMA = "edge-depth/1"

CONJECTURES = ("H1_PERSISTENCE", "DEPTH1_PLUS3_ZERO")


@dataclasses.dataclass(frozen=True)
class ConjectureReport:
    conjecture: str
    status: str  # NO_COUNTEREXAMPLE or COUNTEREXAMPLE_FOUND
    graphs_checked: int
    t_max: int
    counterexample: dict | None = None


def _jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, Classification):
        return obj.name
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": sorted(obj.edges), "graph6": encode_graph6(obj)}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, frozenset):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple, set)):
        return [_jsonable(v) for v in obj]
    if obj == float("inf"):
        return "INFINITE"
    return obj


def invariants(g: Graph) -> dict:
    """Combinatorial summary: ear invariants, depth-zero threshold,
    complement diameter, maximal independent sets, odd cycles."""
    doc: dict = {
        "n": g.n,
        "edges": sorted(g.edges),
        "graph6": encode_graph6(g),
        "connected": is_connected(g),
        "bipartite": is_bipartite(g)[0],
        "strongly_non_bipartite": is_strongly_non_bipartite(g),
        "complement_diameter": complement_diameter(g),
        "maximal_independent_sets": [sorted(f) for f in maximal_independent_sets(g)],
        "odd_cycles": [
            {"cycle": list(c), "dominating": is_dominating_cycle(g, c)}
            for c in odd_cycles(g)
        ],
    }
    if is_strongly_non_bipartite(g):
        phi, _ = phi_star(g)
        doc["phi_star"] = phi
        doc["mu_star"] = mu_star(g)
    info = s_invariant_or_none(g)
    doc["s_invariant"] = info[0] if info is not None else None
    return doc


def analyze(g: Graph, t_max: int, prime: int = DEFAULT_PRIME, with_oracle: bool = False) -> dict:
    """Full analysis document: invariants, ordinary and symbolic depth
    profile, and every theorem check with its witnesses."""
    doc = {"schema": SCHEMA, "invariants": invariants(g)}
    include_symbolic = is_connected(g)
    profile = depth_profile(
        g, t_max, with_oracle=with_oracle, include_symbolic=include_symbolic, prime=prime
    )
    doc["profile"] = {
        "t_max": t_max,
        "ordinary": [_jsonable(c) for c in profile.ordinary],
        "symbolic": [_jsonable(c) for c in profile.symbolic]
        if include_symbolic
        else None,
    }
    doc["theorem_checks"] = [_jsonable(c) for c in all_checks(g, t_max)]
    return doc


def all_checks(g: Graph, t_max: int) -> list:
    checks = [criteria.check_thm_2_1(g, t_max)]
    checks += criteria.check_thm_2_4_and_2_6(g, t_max)
    checks.append(criteria.check_prop_4_1(g))
    checks.append(criteria.check_thm_4_3(g))
    checks += criteria.check_decrease_theorems(g, t_max)
    checks += criteria.check_persistence_props(g, t_max)
    return checks


def run_conjecture_search(
    graphs, t_max: int, progress=None
) -> list[ConjectureReport]:
    """Search the two open questions over a catalog.

    H1_PERSISTENCE: nonzero first cohomology of R/I^t persists to t+1.
    DEPTH1_PLUS3_ZERO: depth R/I^t = 1 implies depth R/I^{t+3} = 0.
    """
    counterexamples: dict[str, dict | None] = {c: None for c in CONJECTURES}
    checked = 0
    for g in graphs:
        checked += 1
        if progress and checked % 25 == 0:
            progress(checked)
        flags = {}
        for t in range(1, t_max + 1):
            zero, _ = depth_zero(g, t)
            h1 = False if zero else h1_nonzero(g, t)[0]
            flags[t] = (zero, h1)
        for t in range(1, t_max):
            if flags[t][1] and not (flags[t + 1][0] or flags[t + 1][1]):
                counterexamples["H1_PERSISTENCE"] = counterexamples[
                    "H1_PERSISTENCE"
                ] or {"graph6": encode_graph6(g), "t": t}
        for t in range(1, t_max + 1):
            if flags[t][0] or not flags[t][1]:
                continue  # depth 1 means H1 nonzero with nonzero H0 absent
            s = t + 3
            if s <= t_max:
                later = flags[s][0]
            else:
                later = depth_zero(g, s)[0]
            if not later:
                counterexamples["DEPTH1_PLUS3_ZERO"] = counterexamples[
                    "DEPTH1_PLUS3_ZERO"
                ] or {"graph6": encode_graph6(g), "t": t}
    return [
        ConjectureReport(
            c,
            "COUNTEREXAMPLE_FOUND" if counterexamples[c] else "NO_COUNTEREXAMPLE",
            checked,
            t_max,
            counterexamples[c],
        )
        for c in CONJECTURES
    ]


def _read_graph(args) -> Graph:
    if args.graph:
        text = args.graph
    elif args.input:
        text = Path(args.input).read_text()
    else:
        text = sys.stdin.read()
    if args.format == "graph6":
        return decode_graph6(text.strip().splitlines()[0])
    return parse_edgelist(text)


def _emit(doc, out):
    text = json.dumps(doc, indent=2, sort_keys=True, default=str)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _verify_report(path: str) -> int:
    """Replay the witnesses in a saved analysis document against the raw
    engine primitives; returns a process exit code."""
    doc = json.loads(Path(path).read_text())
    if doc.get("schema") != SCHEMA:
        print(f"unsupported schema {doc.get('schema')!r}", file=sys.stderr)
        return 1
    g = decode_graph6(doc["invariants"]["graph6"])
    failures = 0
    for t, entry in enumerate(doc["profile"]["ordinary"], start=1):
        witness = entry.get("witness") or {}
        if entry["classification"] == "ZERO" and not depth_zero(g, t)[0]:
            failures += 1
            print(f"ordinary t={t}: ZERO not reproduced")
        if entry["classification"] == "ONE":
            if depth_zero(g, t)[0] or not h1_nonzero(g, t)[0]:
                failures += 1
                print(f"ordinary t={t}: ONE not reproduced")
            kind = witness.get("kind")
            if kind == "disconnecting_vector" and not is_disconnected(
                power_degree_complex(g, tuple(witness["a"]), t)
            ):
                failures += 1
                print(f"ordinary t={t}: disconnecting vector fails")
            if kind == "localized_vertex" and not localized_depth_zero(
                g, witness["v"], t
            ):
                failures += 1
                print(f"ordinary t={t}: localized witness fails")
    print("verify:", "FAILED" if failures else "OK", f"({failures} failures)")
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="edgedepth", description="Depth classification for edge ideal powers."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_opts(p):
        p.add_argument("--graph", help="graph given inline")
        p.add_argument("--input", help="read graph from file")
        p.add_argument(
            "--format", choices=["graph6", "edgelist"], default="graph6"
        )
        p.add_argument("--tmax", type=int, default=4)
        p.add_argument("--field", type=int, default=DEFAULT_PRIME)
        p.add_argument("--with-oracle", action="store_true")
        p.add_argument("--out")

    for name in ("analyze", "profile", "check-theorems", "invariants"):
        add_graph_opts(sub.add_parser(name))

    ps = sub.add_parser("search-conjectures")
    ps.add_argument("--nmax", type=int, default=7)
    ps.add_argument("--tmax", type=int, default=5)
    ps.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("EDGEDEPTH_JOBS", "1")),
        help="reserved for parallel runs; results are deterministic regardless",
    )
    ps.add_argument("--out")

    pv = sub.add_parser("verify")
    pv.add_argument("report")

    args = parser.parse_args(argv)

    if args.command == "verify":
        return _verify_report(args.report)

    if args.command == "search-conjectures":
        graphs = connected_catalog(2, args.nmax, non_bipartite_only=True)
        reports = run_conjecture_search(
            graphs,
            args.tmax,
            progress=lambda k: print(f"checked {k}/{len(graphs)}", file=sys.stderr),
        )
        _emit([_jsonable(r) for r in reports], args.out)
        for r in reports:
            print(f"{r.conjecture}: {r.status}")
        return 2 if any(r.status == "COUNTEREXAMPLE_FOUND" for r in reports) else 0

    try:
        g = _read_graph(args)
    except (CatalogError, OSError, IndexError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1

    if args.command == "invariants":
        _emit(_jsonable(invariants(g)), args.out)
    elif args.command == "profile":
        profile = depth_profile(
            g,
            args.tmax,
            with_oracle=args.with_oracle,
            include_symbolic=is_connected(g),
            prime=args.field,
        )
        _emit(
            {
                "schema": SCHEMA,
                "graph6": encode_graph6(g),
                "ordinary": [_jsonable(c) for c in profile.ordinary],
                "symbolic": [_jsonable(c) for c in profile.symbolic]
                if is_connected(g)
                else None,
            },
            args.out,
        )
    elif args.command == "check-theorems":
        checks = all_checks(g, args.tmax)
        _emit([_jsonable(c) for c in checks], args.out)
        if not all(c.consistent for c in checks):
            return 2
    elif args.command == "analyze":
        _emit(analyze(g, args.tmax, prime=args.field, with_oracle=args.with_oracle), args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
