"""Command-line interface: ``pytuple triples|count|complete|chain|verify``.

Exit codes: 0 success (empty results included), 2 usage, 3 factorization
budget exhausted, 4 verification found discrepancies.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import verify
from .chains import ChainStrategy, build_chains, classify_chain
from .errors import BudgetExceeded, DomainError, InvalidDelta
from .triples import ClassFilter, all_triples, forecast_counts
from .tuples import all_completions, feasibility

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4

TRIPLE_COLUMNS = ("delta", "b", "c", "primitive")
TUPLE_COLUMNS = ("delta", "completion", "hypotenuse", "primitive")
COUNT_COLUMNS = ("leg", "total", "primitive", "non_primitive", "primitive_deltas")
CHAIN_COLUMNS = ("legs", "hypotenuse", "deltas", "branch", "truncated", "halted")
VERIFY_COLUMNS = ("check", "inputs", "detail")


def _positive(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _s(n):
    return str(n)


def _join(values):
    return " ".join(str(v) for v in values)


def _csv_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return value


def _render(fmt, doc, columns, table_lines):
    """Serialize one command result.

    ``doc`` is the JSON document; its ``solutions`` rows feed CSV, so both
    formats always carry the same values.
    """
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in doc["solutions"]:
            writer.writerow([_csv_cell(row[c]) for c in columns])
        return buf.getvalue()
    return "\n".join(table_lines) + "\n"


def _format_table(header, rows):
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)] if rows else [len(h) for h in header]
    lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(x).rjust(w) for x, w in zip(row, widths)))
    return lines


def cmd_triples(args):
    sols = all_triples(args.a, ClassFilter(args.klass))
    rows = [
        {"delta": _s(t.delta), "b": _s(t.b), "c": _s(t.c), "primitive": t.primitive}
        for t in sols
    ]
    doc = {
        "input": {"a": _s(args.a), "class": args.klass},
        "k": _s(args.a * args.a),
        "feasible": True,
        "reason": None,
        "solutions": rows,
    }
    table = _format_table(
        ("delta", "b", "(a, b, c)", "class"),
        [(t.delta, t.b, f"({t.a}, {t.b}, {t.c})", t.kind.value) for t in sols],
    )
    return doc, TRIPLE_COLUMNS, table


def cmd_count(args):
    fc = forecast_counts(args.a)
    deltas = sorted(fc.primitive_deltas)
    row = {
        "leg": _s(fc.leg),
        "total": _s(fc.total),
        "primitive": _s(fc.primitive),
        "non_primitive": _s(fc.non_primitive),
        "primitive_deltas": _join(deltas),
    }
    doc = {
        "input": {"a": _s(args.a)},
        "k": _s(args.a * args.a),
        "feasible": True,
        "reason": None,
        "total": row["total"],
        "primitive": row["primitive"],
        "non_primitive": row["non_primitive"],
        "primitive_deltas": [_s(d) for d in deltas],
        "solutions": [row],
    }
    table = [
        f"leg            {fc.leg}",
        f"total          {fc.total}",
        f"primitive      {fc.primitive}",
        f"non-primitive  {fc.non_primitive}",
        f"primitive gaps {_join(deltas) or '-'}",
    ]
    return doc, COUNT_COLUMNS, table


def cmd_complete(args):
    report = feasibility(args.legs)
    sols = all_completions(args.legs, ClassFilter(args.klass))
    rows = [
        {
            "delta": _s(s.delta),
            "completion": _s(s.completion),
            "hypotenuse": _s(s.hypotenuse),
            "primitive": s.primitive,
        }
        for s in sols
    ]
    reason = report.reason.value if report.reason else None
    doc = {
        "input": {"legs": [_s(x) for x in args.legs], "class": args.klass},
        "k": _s(report.k),
        "feasible": report.feasible,
        "reason": reason,
        "solutions": rows,
    }
    table = [f"k = {report.k}"]
    if not report.feasible:
        table.append(f"infeasible: {reason}")
    legs = ",".join(str(x) for x in args.legs)
    table += _format_table(
        ("delta", "completion", "hypotenuse", "tuple", "class"),
        [(s.delta, s.completion, s.hypotenuse, f"({legs},{s.completion},{s.hypotenuse})", s.kind.value)
         for s in sols],
    )
    return doc, TUPLE_COLUMNS, table


def cmd_chain(args):
    strategy = ChainStrategy(
        mode=args.strategy,
        max_branches=args.max_branches,
        max_magnitude=args.max_magnitude,
    )
    chains = build_chains(args.seed, args.depth, strategy, raise_on_magnitude=False)
    rows = []
    for ch in chains:
        rows.append({
            "legs": [_s(x) for x in ch.legs],
            "hypotenuse": _s(ch.hypotenuse),
            "deltas": [_s(d) for d in ch.deltas],
            "branch": classify_chain(ch).value if ch.depth else None,
            "truncated": ch.truncated,
            "halted": ch.halted,
        })
    doc = {
        "input": {
            "seed": _s(args.seed),
            "depth": _s(args.depth),
            "strategy": strategy.mode.value,
            "max_branches": _s(strategy.max_branches),
            "max_magnitude": _s(strategy.max_magnitude),
        },
        "feasible": True,
        "reason": None,
        "solutions": rows,
        "truncated": any(ch.truncated for ch in chains),
    }
    flat = {
        "solutions": [
            {**r, "legs": _join(r["legs"]), "deltas": _join(r["deltas"])} for r in rows
        ]
    }
    table = []
    for ch, r in zip(chains, rows):
        lhs = " + ".join(f"{x}^2" for x in ch.legs)
        flags = [r["branch"] or "-"]
        if ch.truncated:
            flags.append("truncated")
        if ch.halted:
            flags.append(f"halted:{ch.halted}")
        table.append(f"{lhs} = {ch.hypotenuse}^2  [deltas {_join(ch.deltas)}; {', '.join(flags)}]")
    return doc, CHAIN_COLUMNS, table, flat


def cmd_verify(args):
    mode = args.mode
    summary = {}
    if mode == "triples-oracle":
        found = verify.check_triples_oracle(args.max_leg)
        summary["legs_checked"] = args.max_leg
    elif mode == "predictor":
        found = verify.check_predictor(args.max_leg)
        corpus = verify.tuple_corpus(args.cases, args.max_k, args.corpus_seed)
        found += verify.check_tuple_predictor(corpus)
        summary["legs_checked"] = args.max_leg
        summary["tuple_cases"] = len(corpus)
    elif mode == "counts":
        found = verify.check_counts(args.max_leg)
        summary["legs_checked"] = args.max_leg
    elif mode == "euclid-coverage":
        found = verify.check_euclid_coverage(args.max_m, args.gap_max_m)
        summary["max_m"] = args.max_m
        summary["gap_max_m"] = args.gap_max_m
    else:
        corpus = verify.tuple_corpus(args.cases, args.max_k, args.corpus_seed)
        found = verify.check_tuples_oracle(corpus, cap=args.max_k)
        summary["tuple_cases"] = len(corpus)
    rows = [
        {"check": d.check, "inputs": _join(d.inputs), "detail": d.detail} for d in found
    ]
    doc = {
        "input": {"mode": mode, **{k: _s(v) for k, v in summary.items()}},
        "feasible": True,
        "reason": None,
        "discrepancies": _s(len(found)),
        "solutions": rows,
    }
    table = [f"{mode}: {len(found)} discrepancies"]
    table += [f"  {r['check']} ({r['inputs']}): {r['detail']}" for r in rows]
    return doc, VERIFY_COLUMNS, table, len(found)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--class", dest="klass", default="all",
                        choices=[c.value for c in ClassFilter])
    common.add_argument("--format", dest="fmt", default="table",
                        choices=("table", "json", "csv"))

    parser = argparse.ArgumentParser(
        prog="pytuple",
        description="Enumerate Pythagorean triples, n-tuples and chains by the hypotenuse-gap method.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triples", parents=[common], help="all triples with leg A")
    p.add_argument("a", type=_positive)

    p = sub.add_parser("count", parents=[common], help="forecast triple counts for leg A")
    p.add_argument("a", type=_positive)

    p = sub.add_parser("complete", parents=[common], help="complete legs to an n-tuple")
    p.add_argument("legs", type=_positive, nargs="+")

    p = sub.add_parser("chain", parents=[common], help="grow tuples from a seed")
    p.add_argument("seed", type=_positive)
    p.add_argument("--depth", type=_positive, required=True)
    p.add_argument("--strategy", default="all", choices=("all", "min-delta", "primitive"))
    p.add_argument("--max-branches", type=_positive, default=ChainStrategy.max_branches)
    p.add_argument("--max-magnitude", type=_positive, default=ChainStrategy.max_magnitude)

    p = sub.add_parser("verify", parents=[common], help="differential self-checks")
    p.add_argument("mode", choices=verify.MODES)
    p.add_argument("--max-leg", type=_positive, default=300)
    p.add_argument("--max-m", type=_positive, default=50)
    p.add_argument("--gap-max-m", type=_positive, default=200)
    p.add_argument("--cases", type=_positive, default=None)
    p.add_argument("--max-k", type=_positive, default=None)
    p.add_argument("--corpus-seed", type=int, default=20240101)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        # Chain hypotenuses routinely exceed the default 4300-digit str() limit.
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = sys.stdout
    try:
        if args.command == "chain":
            doc, columns, table, flat = cmd_chain(args)
            if args.fmt == "csv":
                out.write(_render("csv", flat, columns, table))
            else:
                out.write(_render(args.fmt, doc, columns, table))
            return EXIT_OK
        if args.command == "verify":
            if args.mode == "predictor":
                args.cases = args.cases or 1000
                args.max_k = args.max_k or 10**6
            else:
                args.cases = args.cases or 200
                args.max_k = args.max_k or 10**5
            doc, columns, table, n_bad = cmd_verify(args)
            out.write(_render(args.fmt, doc, columns, table))
            return EXIT_VERIFY if n_bad else EXIT_OK
        handler = {"triples": cmd_triples, "count": cmd_count, "complete": cmd_complete}[args.command]
        doc, columns, table = handler(args)
        out.write(_render(args.fmt, doc, columns, table))
        return EXIT_OK
    except BudgetExceeded as exc:
        print(f"pytuple: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, InvalidDelta) as exc:
        print(f"pytuple: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
