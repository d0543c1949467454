"""csf: the command-line front end.

Subcommands
  compute    CSF of an edge-list graph in the m or p basis (JSON)
  decompose  leaf decomposition of a tree (JSON)
  compare    two trees: CSF equality and, with --theorems, all verdicts (JSON)
  survey     pairwise theorem survey over all trees on n vertices (JSON, CSV)
  spider     build a spider from leg lengths; --audit checks the M formula
  starconn   build a star connection from a JSON spec file; --audit likewise
  enumerate  all non-isomorphic trees on n vertices

Exit codes: 0 success; 1 domain error (one "error: ..." line on stderr);
2 usage error.  Output is exact-integer JSON (or edge-list text) and is
byte-identical for identical inputs regardless of --jobs.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .decomposition import alpha_mis, decomposition_to_json_dict, leaf_decomposition
from .errors import GraphError
from .generators import (
    SpiderSpec,
    StarConnectionSpec,
    enumerate_free_trees,
    gen_spider,
    gen_star_connection,
)
from .graphs import as_tree, parse_edge_list, serialize, trees_isomorphic
from .symfunc import (
    BASIS_MONOMIAL,
    csf_equal,
    csf_monomial,
    csf_powersum,
    symfunc_to_json_dict,
)
from .theorems import (
    SURVEY_CSV_HEADER,
    spider_M_formula,
    spider_audit,
    star_connection_counts,
    star_connection_M,
    survey,
    survey_report_to_json_dict,
    thm_componentwise_check,
    thm_leaves_check,
    thm_sum_check,
    verdict_to_json_dict,
)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", out)


def _cmd_compute(args) -> int:
    g = parse_edge_list(_read(args.input))
    f = csf_monomial(g) if args.basis == BASIS_MONOMIAL else csf_powersum(g)
    _emit_json(symfunc_to_json_dict(f), args.out)
    return 0


def _cmd_decompose(args) -> int:
    t = as_tree(parse_edge_list(_read(args.input)))
    _emit_json(decomposition_to_json_dict(leaf_decomposition(t)), None)
    return 0


def _cmd_compare(args) -> int:
    ta = as_tree(parse_edge_list(_read(args.a)))
    tb = as_tree(parse_edge_list(_read(args.b)))
    report = {
        "n_a": ta.n,
        "n_b": tb.n,
        "x_equal": csf_equal(ta, tb),
    }
    if args.theorems:
        if ta.n != tb.n:
            raise GraphError(f"--theorems needs equal vertex counts, got {ta.n} and {tb.n}")
        if trees_isomorphic(ta, tb):
            raise GraphError("--theorems needs non-isomorphic trees")
        report["theorems"] = [
            verdict_to_json_dict(check(ta, tb))
            for check in (thm_leaves_check, thm_componentwise_check, thm_sum_check)
        ]
    _emit_json(report, args.out)
    return 0


def _cmd_survey(args) -> int:
    rep = survey(args.n, jobs=args.jobs)
    _emit_json(survey_report_to_json_dict(rep), args.out)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(SURVEY_CSV_HEADER)
            w.writerows(rep.pair_rows)
    return 0


def _parse_legs(text: str) -> SpiderSpec:
    try:
        legs = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise GraphError(f"malformed --legs value: {text!r}") from None
    return SpiderSpec(legs)


def _cmd_spider(args) -> int:
    spec = _parse_legs(args.legs)
    t = gen_spider(spec)
    if not args.audit:
        _emit(serialize(t.graph), None)
        return 0
    formula, oracle, agrees = spider_audit(spec)
    _emit_json(
        {
            "legs": list(spec.legs),
            "num_vertices": spec.num_vertices,
            "formula": formula,
            "oracle": oracle,
            "agrees": agrees,
        },
        None,
    )
    return 0


def _cmd_starconn(args) -> int:
    spec = StarConnectionSpec.from_json(_read(args.spec))
    t = gen_star_connection(spec)
    if not args.audit:
        _emit(serialize(t.graph), None)
        return 0
    nverts, excess = star_connection_counts(spec)
    m = star_connection_M(spec)
    alpha = alpha_mis(t.graph)
    _emit_json(
        {
            "stars": list(spec.star_sizes),
            "vertex_count": nverts,
            "degree_excess": excess,
            "M": m,
            "alpha": alpha,
            "agrees": m == alpha,
        },
        None,
    )
    return 0


def _cmd_enumerate(args) -> int:
    trees = enumerate_free_trees(args.n)
    if args.count_only:
        _emit(f"{len(trees)}\n", None)
        return 0
    _emit_json([{"n": t.n, "edges": [list(e) for e in t.graph.edges]} for t in trees], None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csf",
        description="Chromatic symmetric functions of trees: computation, "
        "leaf decompositions, and distinguishing-theorem checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="CSF of an edge-list graph")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--basis", required=True, choices=("m", "p"), help="output basis")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("decompose", help="leaf decomposition of a tree")
    p.add_argument("--input", required=True, help="edge-list file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("compare", help="compare two trees")
    p.add_argument("--a", required=True, help="edge-list file")
    p.add_argument("--b", required=True, help="edge-list file")
    p.add_argument("--theorems", action="store_true", help="run all theorem checkers")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("survey", help="pairwise survey over all trees on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, help="worker processes (default: all cores)")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("--csv", help="also write the per-pair CSV here")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("spider", help="build a spider tree")
    p.add_argument("--legs", required=True, help="comma-separated leg lengths, e.g. 2,2,2")
    p.add_argument("--audit", action="store_true", help="audit the M formula instead")
    p.set_defaults(func=_cmd_spider)

    p = sub.add_parser("starconn", help="build a star connection")
    p.add_argument("--spec", required=True, help="JSON spec file")
    p.add_argument("--audit", action="store_true", help="audit the M formula instead")
    p.set_defaults(func=_cmd_starconn)

    p = sub.add_parser("enumerate", help="all non-isomorphic trees on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
