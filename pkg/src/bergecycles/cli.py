"""Command-line front end.

Subcommands: gen, circumference, codiameter, connectivity, grow, verify.
Exit codes: 0 success / claim holds, 1 verification found failures,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .connectivity import is_k_connected
from .constructions import FAMILIES
from .errors import BadParams, BergeError, BudgetExhausted, ParseError
from .harness import (CampaignSpec, emit_report, run_campaign,
                      verify_sharpness)
from .hypergraph import load, save
from .lollipop import grow_long_cycle
from .search import codiameter, longest_berge_cycle

USAGE_ERROR = 2


def _emit(doc: dict, path: str | None) -> None:
    text = json.dumps(doc, indent=1) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    fam = FAMILIES[args.family]
    kwargs = {}
    for name in ("k", "r", "q", "s", "n"):
        value = getattr(args, name, None)
        if value is not None:
            kwargs[name] = value
    try:
        h = fam(**kwargs)
    except (BadParams, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.output is None or args.output == "-":
        sys.stdout.write(h.to_text())
    else:
        save(h, args.output)
    return 0


def _cmd_circumference(args) -> int:
    h = load(args.file)
    try:
        res = longest_berge_cycle(h, node_budget=args.budget)
    except BudgetExhausted as exc:
        print(f"error: budget exhausted (incumbent {exc.incumbent})",
              file=sys.stderr)
        return USAGE_ERROR
    if not res.complete:
        print(f"error: budget exhausted after {res.nodes} nodes",
              file=sys.stderr)
        return USAGE_ERROR
    if res.cycle is None:
        _emit({"length": 0, "vertices": [], "edges": []}, args.output)
    else:
        _emit({"length": res.cycle.length,
               "vertices": list(res.cycle.vertices),
               "edges": list(res.cycle.edges)}, args.output)
    return 0


def _cmd_codiameter(args) -> int:
    h = load(args.file)
    try:
        value = codiameter(h, node_budget=args.budget)
    except BudgetExhausted as exc:
        print(f"error: budget exhausted (incumbent {exc.incumbent})",
              file=sys.stderr)
        return USAGE_ERROR
    _emit({"codiameter": value}, args.output)
    return 0


def _cmd_connectivity(args) -> int:
    h = load(args.file)
    witness = is_k_connected(h, args.k)
    doc = {"k": args.k, "kind": witness.kind, "connectivity": witness.value}
    if witness.separator is not None:
        g = h.incidence_graph()
        doc["separator"] = [list(g.node_label(node))
                            for node in witness.separator]
    _emit(doc, args.output)
    return 0


def _cmd_grow(args) -> int:
    h = load(args.file)
    stats: dict = {}
    cycle = grow_long_cycle(h, max_moves=args.max_moves, stats=stats)
    _emit({"length": cycle.length,
           "vertices": list(cycle.vertices),
           "edges": list(cycle.edges),
           "moves": stats.get("moves", 0),
           "exact": False}, args.output)
    return 0


def _cmd_verify(args) -> int:
    if args.claim == "sharpness":
        if args.k is None:
            print("error: sharpness needs --k", file=sys.stderr)
            return USAGE_ERROR
        report = verify_sharpness(args.k, args.r, budget=args.budget)
    else:
        if args.n is None:
            print("error: --n is required", file=sys.stderr)
            return USAGE_ERROR
        spec = CampaignSpec(claim=args.claim, r=args.r, n=args.n, k=args.k,
                            mode=args.mode, sample_count=args.samples,
                            seed=args.seed, budget=args.budget)
        report = run_campaign(spec)
    if args.output:
        emit_report(report, args.output)
    doc = report.to_document()
    print(f"{report.claim}: {report.passes} passed, "
          f"{len(report.failures)} failed, {report.skipped} skipped "
          f"({doc['wall_time_s']}s)")
    if report.failures:
        print(json.dumps(report.failures[0], indent=1))
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="berge",
        description="Berge-cycle analysis for uniform hypergraphs")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named hypergraph family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    for name, fn, helptext in (
            ("circumference", _cmd_circumference,
             "exact longest Berge cycle"),
            ("codiameter", _cmd_codiameter,
             "exact minimum over pairs of the longest Berge path")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("-o", "--output")
        p.set_defaults(fn=fn)

    p = sub.add_parser("connectivity",
                       help="k-connectivity witness of the incidence graph")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_connectivity)

    p = sub.add_parser("grow", help="heuristic long cycle via local moves")
    p.add_argument("file")
    p.add_argument("--max-moves", type=int, default=100_000)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_grow)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("claim", choices=["circumference", "small_cycle",
                                     "codiameter", "sharpness"])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--mode", choices=["exhaustive", "sample"],
                   default="exhaustive")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_verify)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except BergeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
