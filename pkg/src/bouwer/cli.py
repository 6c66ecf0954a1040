"""Command-line front end.

Exit status: 0 agreement, 1 usage or validation error, 2 disagreement with
the predicted verdict, 3 undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certifier import _Counter, extension_profiles, predicted_verdict, t_set_table
from .core import build_graph, is_bipartite, validate_params
from .cycles import enumerate_cycles_at, girth
from .errors import BouwerError, BudgetExhausted
from .formats import format_edge_list, format_labels, format_permutation
from .oracle import DEFAULT_BUDGET, oracle_arc_reversal
from .report import (
    AGREE, DISAGREE, ERROR, UNDECIDED, SweepSpec, analyze, reports_to_csv, run_sweep,
)
from .taxonomy import six_cycle_form_census, three_arc_census

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_UNDECIDED = 0, 1, 2, 3
_STATUS_EXIT = {AGREE: EXIT_OK, DISAGREE: EXIT_DISAGREE, UNDECIDED: EXIT_UNDECIDED, ERROR: EXIT_USAGE}


def parse_range(text: str) -> tuple[int, int]:
    """``"A..B"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or an integer, got {text!r}") from None


def _add_triple(p: argparse.ArgumentParser) -> None:
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)


def _write(path: str | Path, text: str) -> None:
    path = Path(path)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_generate(args) -> int:
    p = validate_params(args.k, args.m, args.n)
    g = build_graph(p, allow_multigraph=True)
    text = format_edge_list(g) if args.format == "edgelist" else format_labels(p)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    _write(args.out, text)
    if args.format == "edgelist":
        _write(f"{args.out}.labels", format_labels(p))
    print(f"B{p.triple}: {g.order} vertices, {g.edge_count} edges -> {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_classify(args) -> int:
    rep = analyze(args.k, args.m, args.n, oracle=args.oracle,
                  oracle_max_order=args.oracle_max_order, budget=args.oracle_budget)
    row = rep.csv_row()
    print(f"B({rep.k},{rep.m},{rep.n}) order={rep.order} girth={rep.girth} bipartite={row['bipartite']}")
    print(f"verdict:   {rep.verdict or 'undecided'} [{row['evidence']}]")
    print(f"predicted: {rep.predicted}  agree={row['agree']}  oracle={rep.oracle}")
    if args.out:
        _write(args.out, rep.to_json())
    return _STATUS_EXIT[rep.status]


def profile_data(k: int, m: int, n: int) -> dict:
    """Census tables at the origin, as plain data."""
    p = validate_params(k, m, n)
    g = build_graph(p, allow_multigraph=True)
    count = _Counter(g)
    from_v, from_w = extension_profiles(g, count)
    table = t_set_table(g, count)
    return {
        "k": k, "m": m, "n": n, "order": g.order, "simple": g.is_simple,
        "girth": girth(g), "bipartite": is_bipartite(g),
        "cycles_at_origin": {str(L): len(enumerate_cycles_at(g, p.origin, L)) for L in range(3, 7)},
        "three_arc_cases": {str(c): v for c, v in sorted(three_arc_census(g).items())},
        "buckets": {"from_v": {str(i): list(xs) for i, xs in from_v.buckets.items()},
                    "from_w": {str(i): list(xs) for i, xs in from_w.buckets.items()}},
        "t_table": [[*c, tv, tw] for c, (tv, tw) in table.entries.items()],
        "six_cycle_forms": {str(f): v for f, v in sorted(six_cycle_form_census(g).items())},
    }


def cmd_profile(args) -> int:
    d = profile_data(args.k, args.m, args.n)
    print(f"B({d['k']},{d['m']},{d['n']}) order={d['order']} girth={d['girth']} "
          f"bipartite={'yes' if d['bipartite'] else 'no'} simple={'yes' if d['simple'] else 'no'}")
    print("cycles at origin: " + " ".join(f"{L}:{c}" for L, c in d["cycles_at_origin"].items()))
    cases = d["three_arc_cases"]
    print(f"3-arc cases (total {sum(cases.values())}; 0 = unmatched):")
    print("  " + " ".join(f"{c}:{v}" for c, v in cases.items()))
    for side in ("from_v", "from_w"):
        print(f"buckets {side}:")
        for i, xs in d["buckets"][side].items():
            print(f"  {i}: {' '.join(map(str, xs))}")
    print("T-table (i1 i2 j |T_v| |T_w|):")
    for i1, i2, j, tv, tw in d["t_table"]:
        mark = "  *" if tv != tw else ""
        print(f"  {i1} {i2} {j} {tv} {tw}{mark}")
    forms = d["six_cycle_forms"]
    print(f"6-cycle forms (total {sum(forms.values())}; 0 = unmatched):")
    print("  " + " ".join(f"{f}:{v}" for f, v in forms.items()))
    if args.out:
        _write(args.out, json.dumps(d, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = SweepSpec(args.k, args.m, args.n, max_order=args.max_order,
                     oracle_max_order=args.oracle_max_order, oracle=args.oracle,
                     budget=args.oracle_budget)
    reports = run_sweep(spec, jobs=args.jobs, timing=args.timing)
    text = reports_to_csv(reports)
    if args.csv:
        _write(args.csv, text)
    else:
        sys.stdout.write(text)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for rep in reports:
            (out / f"B_{rep.k}_{rep.m}_{rep.n}.json").write_text(rep.to_json())
    statuses = {rep.status for rep in reports}
    print(f"{len(reports)} triples: " + ", ".join(
        f"{s}={sum(r.status == s for r in reports)}" for s in (AGREE, DISAGREE, UNDECIDED, ERROR)),
        file=sys.stderr)
    for status in (DISAGREE, UNDECIDED, ERROR):
        if status in statuses:
            return _STATUS_EXIT[status]
    return EXIT_OK


def cmd_oracle(args) -> int:
    p = validate_params(args.k, args.m, args.n)
    g = build_graph(p, allow_multigraph=True)
    try:
        result = oracle_arc_reversal(g, args.oracle_budget)
    except BudgetExhausted as exc:
        print(f"B{p.triple}: undecided ({exc})")
        return EXIT_UNDECIDED
    found = "reversible" if result.reversible else "irreversible"
    print(f"B{p.triple}: {found} after {result.nodes_explored} nodes")
    if result.witness is not None and args.out:
        _write(args.out, format_permutation(result.witness.image))
    predicted_reversible = predicted_verdict(p).value == "ArcTransitive"
    return EXIT_OK if predicted_reversible == result.reversible else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bouwer", description="Bouwer graph B(k, m, n) toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write the edge list or vertex labels")
    _add_triple(p)
    p.add_argument("--format", choices=["edgelist", "labels"], default="edgelist")
    p.add_argument("--out", help="output file; an edge list also gets a .labels sidecar")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("classify", help="classify one triple and compare with the prediction")
    _add_triple(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with the exhaustive search")
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--oracle-max-order", type=int, default=500,
                   help="skip the oracle above this order")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("profile", help="girth, 3-arc, bucket and 6-cycle tables at the origin")
    _add_triple(p)
    p.add_argument("--out", help="write the tables as JSON here")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("sweep", help="classify every valid triple in a range")
    p.add_argument("--k", type=parse_range, default=(2, 3))
    p.add_argument("--m", type=parse_range, default=(2, 12))
    p.add_argument("--n", type=parse_range, default=(3, 63))
    p.add_argument("--max-order", type=int, default=2000)
    p.add_argument("--oracle", action="store_true", help="cross-check small triples with the oracle")
    p.add_argument("--oracle-max-order", type=int, default=200)
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--csv", help="summary CSV path (default stdout)")
    p.add_argument("--out", help="directory for per-triple JSON reports")
    p.add_argument("--timing", action="store_true", help="fill ms_elapsed (breaks byte-identical output)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="search for an automorphism reversing (0,0) -> (1,0)")
    _add_triple(p)
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", help="write the witness permutation here")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (BouwerError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
