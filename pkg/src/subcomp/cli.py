"""Command-line front end.

Subcommands: analyze, construct, verify, distance, tricliques, bounds,
scan, enumerate. Input graphs are graph6 lines or "n <count>" edge lists
(auto-detected: a space-free line starting in the graph6 byte range is
graph6). Output is deterministic JSON (sorted keys); exit codes are 0 ok,
1 verification failed, 2 parse error, 3 resource ceiling.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .bounds import edge_bound_system, min_vertex_cover, vertex_cover_system
from .forbidden import find_minimal_forbidden
from .forests import forest_path_cover, path_cover_number
from .graphs import (
    Graph,
    MalformedGraph6,
    TooLarge,
    TooLargeForBuiltin,
    emit_graph6,
    enumerate_nonisomorphic,
    is_forest,
    is_linear_forest,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .minrank import DEFAULT_CEILING, min_rank_f2
from .systems import (
    ComplementationSystem,
    c2,
    system_violations,
    verify_system,
)
from .tricliques import Triclique, TricliqueSystem, build_triclique_system, t2

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_CEILING = 3


class _ParseFailure(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _parse_graph(text: str, fmt: str) -> Graph:
    stripped = text.strip()
    if not stripped:
        raise _ParseFailure("empty input")
    first = stripped.splitlines()[0].strip()
    if fmt == "auto":
        fmt = "graph6" if (" " not in first and 63 <= ord(first[0]) <= 126) else "edges"
    try:
        if fmt == "graph6":
            return parse_graph6(first)
        return parse_edge_list(stripped)
    except (MalformedGraph6, ValueError) as exc:
        raise _ParseFailure(str(exc)) from exc


def _load_graph(path: str, fmt: str) -> Graph:
    return _parse_graph(_read_text(path), fmt)


def _emit(obj, table: bool = False) -> None:
    if table:
        for line in _tabulate(obj):
            print(line)
    else:
        print(json.dumps(obj, sort_keys=True, indent=2))


def _tabulate(obj, prefix: str = "") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)):
                lines.append(f"{prefix}{key}:")
                lines.extend(_tabulate(val, prefix + "  "))
            else:
                lines.append(f"{prefix}{key}: {val}")
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)):
                lines.extend(_tabulate(val, prefix + "  "))
            else:
                lines.append(f"{prefix}- {val}")
    else:
        lines.append(f"{prefix}{obj}")
    return lines


def analysis_report(g: Graph, descriptor: str, ceiling: int) -> dict:
    res = min_rank_f2(g, ceiling)
    cert = c2(g, ceiling)
    tri = build_triclique_system(g)
    report = {
        "input": descriptor,
        "n": g.n,
        "m": g.m,
        "rank_adjacency": res.rank_adjacency,
        "mr": res.mr,
        "c2": cert.c2,
        "exceptional": cert.exceptional if g.m else None,
        "t2": t2(g),
        "certificates": {
            "system": cert.system.as_lists(),
            "tricliques": [t.as_dict() for t in tri.tricliques],
        },
    }
    if g.n <= 32:
        vc = vertex_cover_system(g)
        eb = edge_bound_system(g)
        is_path = is_connected(g) and is_linear_forest(g)
        report["bounds"] = {
            "tau": vc.bound_value // 2,
            "vertex_cover": {"bound": vc.bound_value, "size": len(vc.system)},
            "edge": {"bound": eb.bound_value, "size": len(eb.system)},
            "order": g.n - 1 if (g.n < 3 or is_path) else g.n - 2,
        }
    else:
        report["bounds"] = None
    if is_forest(g):
        cover = forest_path_cover(g)
        report["forest"] = {
            "path_cover_number": path_cover_number(g),
            "path_cover": [list(p) for p in cover.paths],
        }
    else:
        report["forest"] = None
    return report


def cmd_analyze(args) -> int:
    g = _load_graph(args.graph, args.format)
    _emit(analysis_report(g, args.graph, args.ceiling), args.table)
    return EXIT_OK


def cmd_construct(args) -> int:
    g = _load_graph(args.graph, args.format)
    cert = c2(g, args.ceiling)
    _emit(
        {
            "n": g.n,
            "c2": cert.c2,
            "mr": cert.mr,
            "exceptional": cert.exceptional,
            "system": cert.system.as_lists(),
        },
        args.table,
    )
    return EXIT_OK


def cmd_tricliques(args) -> int:
    g = _load_graph(args.graph, args.format)
    tri = build_triclique_system(g)
    _emit(
        {"n": g.n, "t2": t2(g), "tricliques": [t.as_dict() for t in tri.tricliques]},
        args.table,
    )
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load_graph(args.graph, args.format)
    reports = [vertex_cover_system(g), edge_bound_system(g)]
    _emit(
        {
            "tau": len(min_vertex_cover(g)),
            "reports": [
                {
                    "bound_name": r.bound_name,
                    "bound_value": r.bound_value,
                    "size": len(r.system),
                    "system": r.system.as_lists(),
                }
                for r in reports
            ],
        },
        args.table,
    )
    return EXIT_OK


def cmd_distance(args) -> int:
    g = _load_graph(args.graph, args.format)
    h = _load_graph(args.other, args.format)
    from .systems import distance

    _emit({"distance": distance(g, h, args.ceiling)}, args.table)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    with open(args.certificate, "r", encoding="ascii") as fh:
        cert = json.load(fh)
    problems: list = []
    ok = True
    if cert.get("n") != g.n:
        ok = False
        problems.append(f"certificate n={cert.get('n')} but graph has {g.n}")
    elif "system" in cert:
        system = ComplementationSystem.from_sets(g.n, cert["system"])
        if "c2" in cert and cert["c2"] != len(system):
            ok = False
            problems.append(f"claimed c2={cert['c2']} but system has {len(system)} sets")
        if not verify_system(g, system):
            ok = False
            for u, v, count, want_odd in system_violations(g, system):
                problems.append(
                    f"pair ({u},{v}) together in {count} sets; needs "
                    f"{'odd' if want_odd else 'even'}"
                )
    elif "tricliques" in cert:
        from .tricliques import verify_triclique_system

        system = TricliqueSystem(
            g.n,
            tuple(
                Triclique(
                    tuple(sum(1 << v for v in part[key]) for key in ("X", "Y", "Z"))
                )
                for part in cert["tricliques"]
            ),
        )
        if "t2" in cert and cert["t2"] != len(system.tricliques):
            ok = False
            problems.append("claimed t2 differs from triclique count")
        if not verify_triclique_system(g, system):
            ok = False
            problems.append("triclique parity check failed")
    else:
        ok = False
        problems.append("certificate has neither 'system' nor 'tricliques'")
    _emit({"ok": ok, "violations": problems}, args.table)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _scan_line(payload: tuple[str, int]) -> dict:
    line, ceiling = payload
    g = parse_graph6(line)
    res = min_rank_f2(g, ceiling)
    cert = c2(g, ceiling)
    return {
        "graph6": line,
        "n": g.n,
        "m": g.m,
        "mr": res.mr,
        "c2": cert.c2,
        "t2": t2(g),
        "exceptional": cert.exceptional if g.m else None,
    }


def cmd_scan(args) -> int:
    text = _read_text(args.stream)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if args.forbidden:
        graphs = [parse_graph6(ln) for ln in lines]
        skipped: list[Graph] = []
        found = find_minimal_forbidden(graphs, args.forbidden, args.k, args.ceiling, skipped)
        report = {
            "invariant": args.forbidden,
            "k": args.k,
            "count": len(found),
            "graphs": [cert.certificate.decode("ascii") for cert, _ in found],
        }
        if skipped:
            report["skipped"] = len(skipped)
        _emit(report, args.table)
        return EXIT_OK
    payloads = [(ln, args.ceiling) for ln in lines]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_scan_line, payloads, chunksize=16))
    else:
        results = [_scan_line(p) for p in payloads]
    for row in results:  # buffered, input order
        print(json.dumps(row, sort_keys=True))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    for g in enumerate_nonisomorphic(args.n):
        print(emit_graph6(g).decode("ascii"))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--ceiling",
        type=int,
        default=DEFAULT_CEILING,
        help="per-component diagonal-enumeration limit (default %(default)s)",
    )
    common.add_argument("--jobs", type=int, default=1, help="scan worker count (timing only)")
    common.add_argument("--table", action="store_true", help="human-readable output")
    common.add_argument(
        "--format",
        choices=("auto", "graph6", "edges"),
        default="auto",
        help="input format override",
    )
    parser = argparse.ArgumentParser(
        prog="subcomp",
        description="Exact subgraph complementation numbers over GF(2), with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full invariant report for one graph")
    p.add_argument("graph", help="input file or - for stdin")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("construct", parents=[common], help="minimum complementation system certificate")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a certificate JSON against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("distance", parents=[common], help="subgraph complementation distance of two graphs")
    p.add_argument("graph")
    p.add_argument("other")
    p.set_defaults(fn=cmd_distance)

    p = sub.add_parser("tricliques", parents=[common], help="minimum triclique certificate")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_tricliques)

    p = sub.add_parser("bounds", parents=[common], help="constructive upper-bound systems")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser(
        "scan", parents=[common], help="bulk-analyze a graph6 stream or hunt minimal forbidden graphs"
    )
    p.add_argument("stream", help="graph6 file, one graph per line, or - for stdin")
    p.add_argument("--forbidden", choices=("c2", "mr"), help="run the minimal-forbidden search")
    p.add_argument("--k", type=int, default=2, help="class threshold for --forbidden")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("enumerate", parents=[common], help="graph6 for every isomorphism class at order n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code = args.fn(args)
    except _ParseFailure as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    except MalformedGraph6 as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    except (json.JSONDecodeError, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    except TooLargeForBuiltin as exc:
        print(f"ceiling: {exc}", file=sys.stderr)
        code = EXIT_CEILING
    except TooLarge as exc:
        print(f"ceiling: {exc}", file=sys.stderr)
        code = EXIT_CEILING
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
