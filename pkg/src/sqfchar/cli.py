"""Command-line interface: ``sqfchar <subcommand> ...``.

Exit codes: 0 success (or "satisfies" for ``check``), 1 computational or
verification failure, 2 usage error, 3 the group fails the hypothesis.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .atlas import WitnessFormatError, load_witnesses, sample_parameters, verify_witness
from .chartab import CHARTAB_FORMAT, TableDefectError, character_table, dumps_table, format_table
from .codegree import format_report, gcd_report, square_free_hypothesis
from .constructors import SpecError, construct
from .families import ConfigError, an_witness, psl2_enumerate_subgroups, psl2_squarefree_conditions
from .fields import prime_power
from .group import DEFAULT_ORDER_BOUND, OrderBoundExceeded, conjugacy_classes
from .verify import check_ids, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_HYPOTHESIS = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _err(msg):
    print(f"sqfchar: {msg}", file=sys.stderr)


def _grid(header, rows):
    cells = [list(map(str, header))] + [["-" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _group(args):
    g = construct(args.spec)
    g.check_bound(args.bound)
    return g


# -- subcommands -------------------------------------------------------------------


def cmd_table(args):
    g = _group(args)
    t = character_table(g, args.bound)
    print(dumps_table(t, args.spec) if args.format == "structured" else format_table(t))
    return EXIT_OK


def cmd_classes(args):
    g = _group(args)
    cls = conjugacy_classes(g, args.bound)
    rows = [
        (i, cls.orders[i], cls.sizes[i], cls.representatives[i].to_cycles())
        for i in range(len(cls))
    ]
    if args.format == "structured":
        print(json.dumps({
            "chartab-format": CHARTAB_FORMAT,
            "group": args.spec,
            "order": g.order,
            "classes": [{"index": i, "order": o, "size": s, "representative": r} for i, o, s, r in rows],
        }))
    else:
        print(f"{args.spec}: order {g.order}, {len(cls)} classes")
        print(_grid(("class", "order", "size", "representative"), rows))
    return EXIT_OK


def cmd_check(args):
    g = _group(args)
    v = square_free_hypothesis(character_table(g, args.bound), args.spec)
    if args.format == "structured":
        w = None if v.witness is None else dict(zip(("degree", "codegree", "prime"), v.witness))
        print(json.dumps({"group": v.spec, "order": g.order, "satisfies": v.satisfies, "witness": w}))
    elif v.satisfies:
        print(f"{v.spec}: satisfies (every gcd(chi(1), chi^c(1)) is square-free)")
    else:
        d, c, p = v.witness
        print(f"{v.spec}: fails: degree {d}, codegree {c}, gcd {__import__('math').gcd(d, c)} divisible by {p}^2")
    return EXIT_OK if v.satisfies else EXIT_HYPOTHESIS


def cmd_codegrees(args):
    g = _group(args)
    report = gcd_report(character_table(g, args.bound))
    print(format_report(report, args.format == "structured", args.spec))
    return EXIT_OK


def _q_values(args):
    if args.q is not None and args.q_range is not None:
        raise UsageError("give either --q or --q-range, not both")
    if args.q is not None:
        qs = [args.q]
    elif args.q_range is not None:
        lo, hi = _range(args.q_range, "--q-range")
        qs = [q for q in range(lo, hi + 1) if prime_power(q) is not None and q > 3]
    else:
        raise UsageError("psl2-scan needs --q or --q-range")
    for q in qs:
        if prime_power(q) is None or q <= 3:
            raise UsageError(f"q = {q} must be a prime power greater than 3")
    return qs


def _range(text, flag):
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"{flag} expects LO:HI") from None
    if lo > hi:
        raise UsageError(f"{flag}: empty range {text}")
    return lo, hi


PSL2_FIELDS = ("q", "d", "delta", "cosetType", "verdict", "failedCondition", "exceptional")


def cmd_psl2_scan(args):
    rows = []
    for q in _q_values(args):
        p, f = prime_power(q)
        for cfg in psl2_enumerate_subgroups(p, f):
            if args.delta_only and not (cfg.contains_delta and p != 2):
                continue
            v = psl2_squarefree_conditions(cfg)
            rows.append({
                "q": q,
                "d": cfg.d,
                "delta": cfg.contains_delta,
                "cosetType": cfg.coset_type,
                "verdict": "satisfies" if v.satisfies else "fails",
                "failedCondition": v.failed_condition,
                "exceptional": v.exceptional,
                "group": cfg.label(),
            })
    if args.format == "structured":
        print(json.dumps({"fields": list(PSL2_FIELDS) + ["group"], "rows": rows}))
    else:
        print(_grid(PSL2_FIELDS + ("group",), [[r[k] for k in PSL2_FIELDS + ("group",)] for r in rows]))
    return EXIT_OK


def cmd_an_witness(args):
    if args.n is None:
        raise UsageError("an-witness needs --n N or --n LO:HI")
    lo, hi = _range(args.n, "--n") if ":" in args.n else (int(args.n),) * 2
    if lo < 8:
        raise UsageError("an-witness needs n >= 8")
    out = []
    for n in range(lo, hi + 1):
        for w in an_witness(n):
            out.append({
                "n": n,
                "partition": list(w.partition.parts),
                "degree": w.degree,
                "closedForm": w.closed_form,
                "codegree": w.codegree,
                "codegreeClosedForm": w.codegree_closed_form,
            })
    if args.format == "structured":
        print(json.dumps({"rows": out}))
    else:
        header = ("n", "partition", "degree", "closedForm", "codegree", "codegreeClosedForm")
        print(_grid(header, [[r["n"], "(" + ",".join(map(str, r["partition"])) + ")", r["degree"], r["closedForm"], r["codegree"], r["codegreeClosedForm"]] for r in out]))
    return EXIT_OK


def cmd_verify_data(args):
    try:
        records = load_witnesses(args.data)
    except (OSError, WitnessFormatError) as exc:
        _err(str(exc))
        return EXIT_FAIL
    outcomes = []
    for rec in records:
        if rec.kind != "lieFamily":
            outcomes.append(verify_witness(rec))
            continue
        if args.q is not None:
            n = args.rank if args.rank is not None else rec.constraint.fixed_rank()
            if rec.has_rank and n is None:
                continue
            if not rec.constraint.holds(args.q, n if rec.has_rank else None):
                continue
            try:
                outcomes.append(verify_witness(rec, args.q, n if rec.has_rank else None))
            except ValueError:
                continue
        else:
            outcomes.extend(verify_witness(rec, q, n) for q, n in sample_parameters(rec, args.samples))
    if args.format == "structured":
        print(json.dumps({"witness-format": 1, "rows": [o.to_dict() for o in outcomes]}))
    else:
        header = ("line", "name", "q", "n", "degree", "gcd", "factor", "status")
        print(_grid(header, [[o.record.line, o.record.name, o.q, o.n if o.record.has_rank else None, o.degree, o.gcd, o.factor, o.status] for o in outcomes]))
    counts = {}
    for o in outcomes:
        counts[o.status] = counts.get(o.status, 0) + 1
    print("; ".join(f"{k}: {v}" for k, v in sorted(counts.items())), file=sys.stderr)
    return EXIT_OK if all(o.status == "confirmed" for o in outcomes) else EXIT_FAIL


def cmd_verify_paper(args):
    only = None
    if args.only:
        only = [x.strip() for x in args.only.split(",") if x.strip()]
        unknown = [x for x in only if x not in check_ids()]
        if unknown:
            raise UsageError(f"unknown check id(s) {', '.join(unknown)}; known: {', '.join(check_ids())}")
    results = run_checks(only, data=args.data, samples=args.samples, progress=True)
    if args.format == "structured":
        print(json.dumps({"passed": all(r.passed for r in results), "checks": [r.to_dict() for r in results]}))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.id:<18} {r.claim}  ({r.seconds:.2f}s)")
            if args.verbose or not r.passed:
                for line in r.lines:
                    print(f"      {line}")
        npass = sum(r.passed for r in results)
        print(f"{npass}/{len(results)} checks passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqfchar", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "structured"), default="table")

    def bound(text):
        value = int(text)
        if value < 1:
            raise argparse.ArgumentTypeError("bound must be positive")
        return value

    group_args = argparse.ArgumentParser(add_help=False, parents=[common])
    group_args.add_argument("spec", help='group spec, e.g. "Alt(5)", "named:M10", "perm:deg=3;gens=(1 2 3)"')
    group_args.add_argument("--bound", type=bound, default=DEFAULT_ORDER_BOUND, help="maximum group order")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, fn, helptext in [
        ("table", cmd_table, "print the character table"),
        ("classes", cmd_classes, "print the conjugacy classes"),
        ("check", cmd_check, "decide the square-free gcd hypothesis (exit 3 when it fails)"),
        ("codegrees", cmd_codegrees, "degree, kernel index, codegree and gcd per character"),
    ]:
        p = sub.add_parser(name, parents=[group_args], help=helptext)
        p.set_defaults(func=fn)

    p = sub.add_parser("psl2-scan", parents=[common], help="conditions for every group between PSL2(q) and its automorphism group")
    p.add_argument("--q", type=int)
    p.add_argument("--q-range", metavar="LO:HI")
    p.add_argument("--delta-only", action="store_true", help="only groups containing the diagonal automorphism")
    p.set_defaults(func=cmd_psl2_scan)

    p = sub.add_parser("an-witness", parents=[common], help="witness characters of Alt(n), n >= 8")
    p.add_argument("--n", metavar="N|LO:HI")
    p.set_defaults(func=cmd_an_witness)

    p = sub.add_parser("verify-data", parents=[common], help="check the witness degree tables arithmetically")
    p.add_argument("--data", help="witness file (default: bundled tables)")
    p.add_argument("--samples", type=int, default=3, help="parameter points per family row")
    p.add_argument("--q", type=int, help="evaluate family rows at this q instead of sampling")
    p.add_argument("--n", dest="rank", type=int, help="rank for family rows with a free rank (with --q)")
    p.set_defaults(func=cmd_verify_data)

    p = sub.add_parser("verify-paper", parents=[common], help="run every reproducible claim; exit 0 iff all pass")
    p.add_argument("--only", help="comma-separated check ids: " + ", ".join(check_ids()))
    p.add_argument("--data", help="witness file (default: bundled tables)")
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("-v", "--verbose", action="store_true", help="print every sub-claim")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SpecError, ConfigError, OrderBoundExceeded) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except (TableDefectError, ArithmeticError) as exc:
        _err(f"computation failed: {exc}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
