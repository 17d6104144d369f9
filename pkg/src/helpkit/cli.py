"""Command-line interface.

    helpkit validate <file>
    helpkit solve --table <file|name> --order <k> [--chars a,b] [--mode ...]
    helpkit rule-out --table <file|name> --primes <s>,<t>
    helpkit report [--skip tag,...] [--full-table GROUP=path] [--mode ...]

Exit codes: 0 success, 1 validation or diff failure, 2 usage error,
3 node budget exceeded.  HELPKIT_BUDGET overrides the search budget.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .chartable import (
    IncompleteTable,
    TableSyntaxError,
    ValidationError,
    parse_table,
    validate_orthogonality,
)
from .lpcore import candidate_orders, classify_rational
from .report import (
    BUNDLED_GROUPS,
    load_bundled_table,
    load_replay_plans,
    render_ruleout_table,
    run_report,
    solve_order,
)
from .solver import BudgetExceeded, UnboundedVariable, serialize_solutions
from .stconstant import EmptyConstraintSet, SpectrumOrder, rule_out_order

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("HELPKIT_BUDGET")
    return int(env) if env else 10**8


def _load_table(spec: str):
    if spec.lower() in BUNDLED_GROUPS or spec.lower() in ("a5", "s3"):
        return load_bundled_table(spec.lower()), spec.lower()
    with open(spec, "r", encoding="utf-8") as fh:
        return parse_table(fh.read()), None


def cmd_validate(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            table = parse_table(fh.read())
    except (TableSyntaxError, ValidationError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_FAIL
    print(f"{table.group_name}: {len(table.classes)} classes, "
          f"{len(table.characters)} characters")
    if table.is_complete():
        rep = validate_orthogonality(table)
        if rep.ok:
            print("orthogonality: pass")
        else:
            for i, j, value in rep.failures:
                print(f"orthogonality failure: <{i},{j}> = {value}", file=sys.stderr)
            return EXIT_FAIL
    else:
        print("partial table: sizes or character values missing; "
              "orthogonality not checked")
    return EXIT_OK


def cmd_solve(args) -> int:
    table, name = _load_table(args.table)
    plans = load_replay_plans(name) if name in BUNDLED_GROUPS and args.replay else None
    if args.chars:
        plans = {args.order: [(c, l) for c in args.chars.split(",")
                              for l in range(args.order)]}
    try:
        res = solve_order(table, args.order, mode=args.mode, plans=plans,
                          budget=_budget(args))
    except BudgetExceeded as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_BUDGET
    except UnboundedVariable as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_FAIL
    tops = res.top_tuples()
    text = serialize_solutions(tops)
    vars_ = ",".join(v.cls for v in res.top_vars)
    lines = [f"# {table.group_name}, order {args.order}: ({vars_})", text.rstrip("\n")]
    chain_orders = sorted({m for s in res.solutions for m, _ in s.chain}, reverse=True)
    for m in chain_orders:
        tuples = sorted({dict(s.chain)[m] for s in res.solutions})
        shown = ", ".join("(" + ",".join(map(str, t)) + ")" for t in tuples)
        lines.append(f"# order-{m} chain tuples: {shown}")
    rational = bool(res.solutions) and all(
        classify_rational({res.order: s.assignment, **s.chain_dict()})
        for s in res.solutions
    )
    lines.append(f"# {len(tops)} tuples; rationally conjugate: "
                 f"{'yes' if rational else 'no'}")
    out = "\n".join(line for line in lines if line) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_rule_out(args) -> int:
    table, _ = _load_table(args.table)
    try:
        s, t = (int(x) for x in args.primes.split(","))
    except ValueError:
        print("error: --primes expects s,t", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep = rule_out_order(table, s, t, rows="auto")
    except (SpectrumOrder, EmptyConstraintSet) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(render_ruleout_table(rep))
    return EXIT_OK if rep.infeasible else EXIT_FAIL


def cmd_report(args) -> int:
    full_tables = {}
    for spec in args.full_table or []:
        group, _, path = spec.partition("=")
        if not path:
            print("error: --full-table expects GROUP=path", file=sys.stderr)
            return EXIT_USAGE
        with open(path, "r", encoding="utf-8") as fh:
            full_tables[group.lower()] = parse_table(fh.read())
    skip = set()
    for chunk in args.skip or []:
        skip.update(x.strip() for x in chunk.split(",") if x.strip())
    t0 = time.time()
    try:
        report = run_report(skip=skip, budget=_budget(args),
                            full_tables=full_tables, mode=args.mode)
    except BudgetExceeded as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_BUDGET
    for line in report.lines():
        print(line)
    print(f"total {time.time() - t0:.1f}s")
    return report.exit_code


def cmd_orders(args) -> int:
    table, _ = _load_table(args.table)
    for cand in candidate_orders(table):
        flag = "in-spectrum" if cand.in_spectrum else "out-of-spectrum"
        print(f"{cand.order} {flag}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="helpkit",
        description="Constraint systems for torsion units of integral group "
                    "rings, specialized to the Conway groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a table document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="admissible partial augmentations of one order")
    p.add_argument("--table", required=True,
                   help="path to a table document, or a bundled name (co1/co2/co3/a5/s3)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--chars", help="restrict to a comma-separated character list")
    p.add_argument("--mode", choices=("joint", "case-split"), default="case-split")
    p.add_argument("--replay", action="store_true",
                   help="use the bundled published row selections")
    p.add_argument("--out")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("rule-out", help="decide an out-of-spectrum order s*t")
    p.add_argument("--table", required=True)
    p.add_argument("--primes", required=True, help="s,t")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_rule_out)

    p = sub.add_parser("report", help="run every golden regression check")
    p.add_argument("--skip", action="append", help="check tags to skip")
    p.add_argument("--full-table", action="append",
                   help="GROUP=path for checks that need complete tables")
    p.add_argument("--mode", choices=("joint", "case-split"), default="case-split")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("orders", help="candidate torsion-unit orders of a table")
    p.add_argument("--table", required=True)
    p.set_defaults(func=cmd_orders)

    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_USAGE if ex.code not in (0, None) else 0
    try:
        return args.func(args)
    except (TableSyntaxError, ValidationError, IncompleteTable, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
