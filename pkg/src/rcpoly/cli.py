"""Command-line front end.

    rcpoly poly --graph6 Bw --restraint "1;1;1"
    rcpoly count --graph6 Bw --restraint "1;2;3" --x 3
    rcpoly extremal --graph6 Bw --direction max
    rcpoly verify theorem2 --n 5
    rcpoly catalog-check --graph6-file connected_1_6.g6

Exit codes: 0 success / claim holds, 1 counterexample found, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from .catalog import CONNECTED, CatalogError, check_catalog, load_connected_catalog, read_catalog
from .engine import brute_count, rcp_delcon
from .extremal import (
    DEFAULT_MAX_N,
    check_conjecture_bipartite,
    extremal_restraints,
    figure_matches,
    survey_non_minimal_maximizers,
    verify_lemma_trees,
    verify_min_is_constant,
    verify_theorem1,
    verify_theorem2,
)
from .graph import Graph, GraphError, encode_graph6, is_bipartite, parse_edge_list, parse_graph6
from .restraints import RestraintError, format_restraint, parse_restraint

EXIT_OK, EXIT_CLAIM_FAILS, EXIT_USAGE = 0, 1, 2

CLAIMS = ("theorem1", "theorem2", "lemma", "min-constant", "conjecture", "survey", "figure1")
N_CAPS = {"theorem1": (1, 7), "theorem2": (2, 7), "lemma": (1, 6)}
PAPER_SURVEY_COUNT = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi or lo < 0:
        raise argparse.ArgumentTypeError(f"bad x-window {text!r}")
    return lo, hi


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--graph6", action="append", default=[], help="graph6 record (repeatable)")
    common.add_argument("--graph6-file", help="graph6 file, one record per line, '#' comments")
    common.add_argument("--edges-file", help="edge list file: 'n' then 'u v' lines")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("--max-n", type=int, default=None, help="largest graph order to accept")

    p = _Parser(prog="rcpoly", description="Restrained chromatic polynomials of small graphs.")
    p.add_argument("--version", action="version", version=f"rcpoly {__version__}")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    sp = sub.add_parser("poly", parents=[common], help="restrained chromatic polynomial")
    sp.add_argument("--restraint", required=True, help='e.g. "1;2;1" or "1,2;3;"')
    sp.add_argument("--x-window", type=_window, help="also evaluate on LO:HI")

    sp = sub.add_parser("count", parents=[common], help="count permitted colourings")
    sp.add_argument("--restraint", required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--x", type=int)
    g.add_argument("--x-window", type=_window)

    sp = sub.add_parser("extremal", parents=[common], help="extremal simple restraints of a graph")
    sp.add_argument("--direction", choices=("max", "min"), default="max")

    sp = sub.add_parser("verify", parents=[common], help="check one of the claims exhaustively")
    sp.add_argument("claim", choices=CLAIMS)
    sp.add_argument("--n", type=int, help="order for theorem1/theorem2/lemma")
    sp.add_argument("--fail-fast", action="store_true")
    sp.add_argument("--expect", type=int, default=PAPER_SURVEY_COUNT,
                    help="survey: number of exceptional graphs expected")

    sp = sub.add_parser("catalog-check", parents=[common], help="validate a connected-graph catalog")
    sp.add_argument("--all-graphs", action="store_true", help="catalog holds all graphs, not just connected")
    return p


# --------------------------------------------------------------------------
# inputs
# --------------------------------------------------------------------------

def _graphs(args: argparse.Namespace, *, required: bool = True) -> list[Graph]:
    graphs = [parse_graph6(s) for s in args.graph6]
    if args.graph6_file:
        graphs += read_catalog(args.graph6_file)
    if args.edges_file:
        graphs.append(parse_edge_list(Path(args.edges_file).read_text()))
    if required and not graphs:
        raise UsageError("no graph given (use --graph6, --graph6-file or --edges-file)")
    if args.max_n is not None:
        too_big = [encode_graph6(g) for g in graphs if g.n > args.max_n]
        if too_big and not args.subcommand == "verify":
            raise UsageError(f"graph {too_big[0]} exceeds --max-n {args.max_n}")
    return graphs


def _catalog(args: argparse.Namespace, default_max: int) -> tuple[list[Graph], bool]:
    """Graphs for a catalog verifier; the flag says whether the bundled catalog was used."""
    max_n = args.max_n if args.max_n is not None else default_max
    explicit = _graphs(args, required=False)
    if explicit:
        return [g for g in explicit if g.n <= max_n], False
    return load_connected_catalog(max_n), True


def _restraint(args: argparse.Namespace, g: Graph):
    r = parse_restraint(args.restraint)
    if len(r) != g.n:
        raise UsageError(f"restraint has {len(r)} vertices, graph {encode_graph6(g)} has {g.n}")
    return r


# --------------------------------------------------------------------------
# subcommands: each returns (results, claim_holds)
# --------------------------------------------------------------------------

def _cmd_poly(args) -> tuple[list[dict], bool]:
    out = []
    for g in _graphs(args):
        r = _restraint(args, g)
        rp = rcp_delcon(g, r)
        row = {"graph6": encode_graph6(g), "restraint": format_restraint(r), **rp.to_json()}
        if args.x_window:
            lo, hi = args.x_window
            row["values"] = {str(x): rp(x) for x in range(max(lo, rp.threshold), hi + 1)}
        out.append(row)
    return out, True


def _cmd_count(args) -> tuple[list[dict], bool]:
    out = []
    xs = [args.x] if args.x is not None else range(args.x_window[0], args.x_window[1] + 1)
    for g in _graphs(args):
        r = _restraint(args, g)
        for x in xs:
            if x < 0:
                raise UsageError("x must be nonnegative")
            out.append({"graph6": encode_graph6(g), "restraint": format_restraint(r),
                        "x": x, "count": brute_count(g, r, x)})
    return out, True


def _cmd_extremal(args) -> tuple[list[dict], bool]:
    limit = args.max_n if args.max_n is not None else DEFAULT_MAX_N
    out = []
    for g in _graphs(args):
        if not 1 <= g.n <= limit:
            raise UsageError(f"graph order {g.n} outside 1..{limit}")
        out.append(extremal_restraints(g, args.direction, max_n=limit).to_json())
    return out, True


def _cmd_verify(args) -> tuple[list[dict], bool]:
    claim = args.claim
    if claim in N_CAPS:
        lo, hi = N_CAPS[claim]
        if args.n is None or not lo <= args.n <= hi:
            raise UsageError(f"verify {claim} needs --n in {lo}..{hi}")
        if claim == "theorem1":
            v = verify_theorem1(args.n, fail_fast=args.fail_fast)
        elif claim == "theorem2":
            v = verify_theorem2(args.n, jobs=args.jobs, fail_fast=args.fail_fast)
        else:
            v = verify_lemma_trees(args.n, fail_fast=args.fail_fast)
        return [v.to_json()], v.holds

    if claim == "min-constant":
        graphs, _ = _catalog(args, 5)
        v = verify_min_is_constant(graphs, jobs=args.jobs)
        return [v.to_json()], v.holds

    if claim == "conjecture":
        graphs, bundled = _catalog(args, 6)
        if bundled:
            graphs = [g for g in graphs if is_bipartite(g)]
        else:
            bad = [encode_graph6(g) for g in graphs if not is_bipartite(g)]
            if bad:
                raise UsageError(f"graph {bad[0]} is not bipartite")
        v = check_conjecture_bipartite(graphs, jobs=args.jobs)
        return [v.to_json()], v.holds

    if claim == "survey":
        graphs, _ = _catalog(args, 6)
        found = survey_non_minimal_maximizers(graphs, jobs=args.jobs)
        rows = [rep.to_json() for _, rep in found]
        return rows, len(rows) == args.expect

    graphs, _ = _catalog(args, 6)
    matches = figure_matches(graphs, jobs=args.jobs)
    rows = [{"graph6": m.graph6, "labelling": list(m.labelling), "labelled_graph6": m.labelled_graph6}
            for m in matches]
    return rows, bool(rows)


def _cmd_catalog_check(args) -> tuple[list[dict], bool]:
    if args.graph6_file:
        graphs = read_catalog(args.graph6_file)
        source = args.graph6_file
    elif args.graph6:
        graphs = [parse_graph6(s) for s in args.graph6]
        source = "--graph6"
    else:
        graphs = read_catalog(CONNECTED)
        source = CONNECTED
    problems = check_catalog(graphs, connected=not args.all_graphs)
    counts: dict[str, int] = {}
    for g in graphs:
        counts[str(g.n)] = counts.get(str(g.n), 0) + 1
    return [{"source": source, "graphs": len(graphs), "per_order": counts, "problems": problems}], not problems


COMMANDS = {
    "poly": _cmd_poly,
    "count": _cmd_count,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
    "catalog-check": _cmd_catalog_check,
}


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------

def _inputs(args: argparse.Namespace) -> dict:
    skip = {"subcommand", "format", "jobs"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v not in (None, [], False)}


def _flat(row: dict) -> dict:
    return {k: (json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v) for k, v in row.items()}


def render(args: argparse.Namespace, results: list[dict], holds: bool, seconds: float) -> str:
    if args.format == "json":
        doc = {
            "subcommand": args.subcommand if args.subcommand != "verify" else f"verify {args.claim}",
            "inputs": _inputs(args),
            "results": results,
            "holds": holds,
            "timing": {"seconds": round(seconds, 3)},
            "tool_version": __version__,
        }
        return json.dumps(doc, indent=2, sort_keys=False)
    if args.format == "csv":
        rows = [_flat(r) for r in results]
        fields: list[str] = []
        for r in rows:
            fields += [k for k in r if k not in fields]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in results:
        lines.append("  ".join(f"{k}={v}" for k, v in _flat(r).items()))
    lines.append(f"# {'holds' if holds else 'FAILS'} ({seconds:.2f}s)")
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        start = time.perf_counter()
        results, holds = COMMANDS[args.subcommand](args)
        seconds = time.perf_counter() - start
    except (UsageError, GraphError, RestraintError, CatalogError, ValueError, OSError) as exc:
        print(f"rcpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(args, results, holds, seconds))
    return EXIT_OK if holds else EXIT_CLAIM_FAILS


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
