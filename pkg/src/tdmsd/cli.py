"""Command-line surface: compute invariants, run theorem sweeps, generate
and test the tree family, enumerate graphs, and emit fixtures.

Exit codes: 0 success, 1 theorem violated (a counterexample was found and
must never be swallowed), 2 usage or parse error, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import subdivision
from .characterization import inner_edge_condition, leaf_condition, predicts_sd_one
from .domination import gamma, gamma_t
from .enumeration import enumerate_connected_graphs, enumerate_trees
from .errors import GraphError, MalformedInput, UnknownTheorem
from .family import generate_family, is_in_family
from .fixtures import FIXTURE_NAMES, fixture_by_name
from .graph import Graph, format_edge_list, parse_edge_list, structure_profile
from .graph6 import graph6_decode, graph6_encode
from .subdivision import msd_gamma, msd_gamma_t, sd_gamma, sd_gamma_t
from .verify import THEOREMS, run_verification

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def _read_graph(spec: str, fmt: str) -> Graph:
    """Accept a file path, a graph6 literal, or a fixture name."""
    text = None
    if os.path.exists(spec):
        text = Path(spec).read_text(encoding="utf-8")
    if text is None:
        try:
            return fixture_by_name(spec)
        except MalformedInput:
            pass
        text = spec
    stripped = text.strip()
    if not stripped:
        raise MalformedInput("empty graph input")
    if fmt == "edge-list":
        return parse_edge_list(stripped)
    if fmt == "graph6":
        return graph6_decode(stripped.splitlines()[0])
    first = stripped.splitlines()[0].split()
    if len(first) == 2 and all(tok.isdigit() for tok in first):
        return parse_edge_list(stripped)
    return graph6_decode(stripped.splitlines()[0])


def _emit(obj, out) -> None:
    print(json.dumps(obj, sort_keys=True), file=out)


def _graph_json(fmt: str, g: Graph) -> str:
    return graph6_encode(g) if fmt == "graph6" else format_edge_list(g).rstrip("\n")


def _cmd_compute(args, out) -> int:
    g = _read_graph(args.input, args.format)
    inv = args.invariant
    if inv in ("gamma", "gamma_t"):
        cert = gamma(g) if inv == "gamma" else gamma_t(g)
        _emit({
            "invariant": inv,
            "value": cert.value,
            "witness": sorted(cert.witness),
            "base_value": None,
        }, out)
        return EXIT_OK
    fns = {
        "sd": sd_gamma,
        "sd_t": sd_gamma_t,
        "msd": msd_gamma,
        "msd_t": msd_gamma_t,
    }
    kwargs = {}
    if args.cap is not None:
        kwargs["cap"] = args.cap
    result = fns[inv](g, **kwargs)
    _emit({
        "invariant": inv,
        "value": result.value,
        "witness": {
            "edges": [list(e) for e in result.witness_edges],
            "t": list(result.witness_t),
        },
        "base_value": result.base_value,
        "increased_value": result.increased_value,
        "exceeded_cap": result.exceeded,
    }, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    report = run_verification(args.theorem, n_max=args.n_max, jobs=args.jobs)
    if args.verbose:
        for rec in report.records:
            _emit({
                "graph6": rec.graph6,
                "ok": rec.ok,
                "expected": rec.expected,
                "actual": rec.actual,
            }, out)
    summary = {
        "theorem": report.theorem_id,
        "orders_checked": list(report.orders_checked),
        "graphs_checked": report.graphs_checked,
        "failures": [
            {"graph6": r.graph6, "expected": r.expected, "actual": r.actual}
            for r in report.failures
        ],
        "elapsed_seconds": round(report.elapsed, 3),
        "ok": report.ok,
    }
    _emit(summary, out)
    if args.out:
        Path(args.out).write_text(json.dumps(summary, sort_keys=True) + "\n", encoding="utf-8")
    return EXIT_OK if report.ok else EXIT_VIOLATED


def _cmd_family(args, out) -> int:
    if args.family_cmd == "generate":
        members = generate_family(args.n_max)
        if args.out:
            directory = Path(args.out)
            directory.mkdir(parents=True, exist_ok=True)
            for i, member in enumerate(members):
                body = format_edge_list(member.tree) + f"status: {member.status}\n"
                (directory / f"member_{i:03d}_n{member.n}.txt").write_text(
                    body, encoding="utf-8"
                )
        for member in members:
            _emit({
                "n": member.n,
                "graph6": graph6_encode(member.tree),
                "status": member.status,
            }, out)
        _emit({"members": len(members), "n_max": args.n_max}, out)
        return EXIT_OK
    g = _read_graph(args.input, args.format)
    _emit({"n": g.n, "graph6": graph6_encode(g), "in_family": is_in_family(g)}, out)
    return EXIT_OK


def _cmd_characterize(args, out) -> int:
    g = _read_graph(args.input, args.format)
    leaf = leaf_condition(g)
    inner = [
        {"edge": list(e), "holds": inner_edge_condition(g, e).holds}
        for e in structure_profile(g).inner_edges
    ]
    _emit({
        "graph6": graph6_encode(g),
        "leaf_in_no_minimum_set": leaf,
        "inner_edges": inner,
        "predicts_sd_one": predicts_sd_one(g),
        "sd_gamma_t": sd_gamma_t(g).value,
    }, out)
    return EXIT_OK


def _cmd_enum(args, out) -> int:
    stream = (
        enumerate_trees(args.n)
        if args.kind == "trees"
        else enumerate_connected_graphs(args.n)
    )
    for g in stream:
        print(_graph_json(args.format, g), file=out)
    return EXIT_OK


def _cmd_fixtures(args, out) -> int:
    if args.list:
        for name in FIXTURE_NAMES:
            print(name, file=out)
        return EXIT_OK
    if not args.name:
        raise MalformedInput("fixtures needs --name or --list")
    g = fixture_by_name(args.name)
    print(_graph_json(args.format, g), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdmsd",
        description="Exact (total) domination subdivision invariants and theorem sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one invariant of one graph")
    p.add_argument("--input", required=True, help="file path, graph6 literal, or fixture name")
    p.add_argument("--invariant", required=True,
                   choices=["gamma", "gamma_t", "sd", "msd", "sd_t", "msd_t"])
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--format", choices=["auto", "edge-list", "graph6"], default="auto")

    p = sub.add_parser("verify", help="run one theorem sweep")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--out", default=None, help="also write the summary JSON here")

    p = sub.add_parser("family", help="generate family members or test membership")
    fam = p.add_subparsers(dest="family_cmd", required=True)
    gen = fam.add_parser("generate")
    gen.add_argument("--n-max", type=int, default=14)
    gen.add_argument("--out", default=None, help="directory for edge-list member files")
    tst = fam.add_parser("test")
    tst.add_argument("--input", required=True)
    tst.add_argument("--format", choices=["auto", "edge-list", "graph6"], default="auto")

    p = sub.add_parser("characterize", help="report the fired branch per tree")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["auto", "edge-list", "graph6"], default="auto")

    p = sub.add_parser("enum", help="emit non-isomorphic graphs, one per line")
    p.add_argument("--kind", choices=["trees", "connected"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["graph6", "edge-list"], default="graph6")

    p = sub.add_parser("fixtures", help="emit named fixture graphs")
    p.add_argument("--name", default=None)
    p.add_argument("--list", action="store_true")
    p.add_argument("--format", choices=["graph6", "edge-list"], default="edge-list")
    return parser


_COMMANDS = {
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "family": _cmd_family,
    "characterize": _cmd_characterize,
    "enum": _cmd_enum,
    "fixtures": _cmd_fixtures,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = os.environ.get("TDMSD_CACHE_DIR")
    if cache_dir:
        subdivision.enable_persistent_cache(cache_dir)
    try:
        code = _COMMANDS[args.command](args, out)
    except (MalformedInput, UnknownTheorem) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    finally:
        if cache_dir:
            subdivision.save_persistent_cache(cache_dir)
    return code


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
