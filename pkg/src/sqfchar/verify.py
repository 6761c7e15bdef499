"""The reproducible claims, as named checks shared by ``sqfchar verify-paper`` and the test suite.

Each check returns a :class:`CheckResult` holding one line per sub-claim, so a
failure names exactly what disagreed.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass, field
from typing import Callable

from .atlas import load_witnesses, sample_parameters, verify_witness
from .chartab import character_table, verify_table
from .codegree import clifford_divisibility_check, codegree, gcd_report, quotient_codegree_pairs, square_free_hypothesis
from .constructors import construct, projective_line_group
from .families import (
    Psl2Config,
    an_witness,
    partition_degree,
    partitions,
    psl2_config_group,
    psl2_enumerate_subgroups,
    psl2_order,
    white_degree_set,
    psl2_squarefree_conditions,
)
from .fields import prime_power
from .group import PermutationGroup
from .orders import fourth_power_free, lie_group_order, simple_group_order
from .perm import Permutation

__all__ = ["CheckResult", "CHECKS", "run_checks", "check_ids"]


@dataclass
class CheckResult:
    id: str
    claim: str
    passed: bool = True
    lines: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def add(self, ok: bool, text: str):
        self.lines.append(f"[{'ok' if ok else 'FAIL'}] {text}")
        self.passed &= bool(ok)

    def to_dict(self) -> dict:
        return {"id": self.id, "claim": self.claim, "passed": self.passed, "seconds": round(self.seconds, 3), "details": self.lines}


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


# -- individual checks -------------------------------------------------------------


def check_a8_witness(r: CheckResult, **_):
    t = character_table(construct("Alt(8)"))
    v = square_free_hypothesis(t, "Alt(8)")
    rows = [row for row in gcd_report(t).rows if row.degree == 20]
    r.add(not v.satisfies, f"Alt(8) verdict: {'satisfies' if v.satisfies else 'fails'}")
    r.add(v.witness == (20, 1008, 2), f"first witness (degree, codegree, prime) = {v.witness}")
    r.add(bool(rows) and rows[0].codegree == 1008 and rows[0].gcd == 4, "degree 20 row has codegree 1008 and gcd 4")


POSITIVE = ["Alt(5)", "Alt(6)", "Alt(7)", "Sym(5)", "Sym(6)", "named:M10", "named:PGL2_9"] + [
    f"PSL2({q})" for q in (5, 7, 8, 9, 11, 13)
]
NEGATIVE = ["Sym(7)", "Alt(8)", "named:Aut(PSL2(9))"]


def check_classification(r: CheckResult, **_):
    for spec, expected in [(s, True) for s in POSITIVE] + [(s, False) for s in NEGATIVE]:
        _progress(f"  classification: {spec}")
        v = square_free_hypothesis(character_table(construct(spec)), spec)
        word = "satisfies" if v.satisfies else f"fails, witness {v.witness}"
        r.add(v.satisfies == expected, f"{spec}: {word}")


def _pgl(q):
    p, f = prime_power(q)
    return Psl2Config(p, f, True, 1, "plain")


def _psl(q):
    p, f = prime_power(q)
    return Psl2Config(p, f, p == 2, 1, "plain")


def check_white(r: CheckResult, **_):
    cases = [(_psl(q), construct(f"PSL2({q})")) for q in (5, 7, 8, 9, 11, 13)]
    cases += [(_pgl(q), construct(f"PGL2({q})")) for q in (5, 7, 9)]
    for cfg, group in cases:
        predicted = white_degree_set(cfg)
        actual = character_table(group).degree_set()
        r.add(predicted.degrees == actual, f"{group.name}: formula {sorted(predicted.degrees)}, table {sorted(actual)}")
    r.add(6 not in white_degree_set(_psl(5)).degrees, "6 is not a degree of PSL2(5)")


def check_psl2_conditions(r: CheckResult, **_):
    for q in (5, 7, 8, 9):
        p, f = prime_power(q)
        for cfg in psl2_enumerate_subgroups(p, f):
            verdict = psl2_squarefree_conditions(cfg)
            brute = square_free_hypothesis(character_table(psl2_config_group(cfg)))
            note = " (exceptional)" if verdict.exceptional else ""
            r.add(
                verdict.satisfies == brute.satisfies,
                f"{cfg.label()}: conditions say {verdict.satisfies}{note}, table says {brute.satisfies}",
            )


def check_an_witness(r: CheckResult, **_):
    for n in range(1, 9):
        total = sum(partition_degree(lam) ** 2 for lam in partitions(n))
        r.add(total == math.factorial(n), f"sum of squared hook degrees for n={n} is {n}!")
    bad = []
    for n in range(8, 41):
        try:
            ws = an_witness(n)
        except ArithmeticError as exc:
            bad.append(f"n={n}: {exc}")
            continue
        if n >= 9:
            w = ws[1] if n % 2 else ws[0]
            if w.codegree_closed_form != w.codegree:
                bad.append(f"n={n}: codegree {w.codegree}")
    r.add(not bad, "closed-form degrees and codegrees agree with hook lengths for 8 <= n <= 40" + ("; " + ", ".join(bad) if bad else ""))
    w8 = an_witness(8)
    r.add(w8[2].degree == 20 and 20160 // 20 == 1008, "n=8: the (6,2) character has degree 20 and codegree 1008")


def check_sporadic(r: CheckResult, data=None, **_):
    records = [rec for rec in load_witnesses(data) if rec.kind == "sporadic"]
    r.add(len(records) == 25, f"{len(records)} sporadic rows loaded")
    for rec in records:
        o = verify_witness(rec)
        r.add(o.status == "confirmed", f"{rec.name}: degree {o.degree}, gcd {o.gcd}, factor {o.factor}: {o.status}")


def check_lie_tables(r: CheckResult, data=None, samples=3, **_):
    records = [rec for rec in load_witnesses(data) if rec.kind != "sporadic"]
    for rec in records:
        if rec.kind == "lieFixed":
            o = verify_witness(rec)
            r.add(o.status == "confirmed", f"{rec.name}: degree {o.degree}, gcd {o.gcd}: {o.status} {o.note}".rstrip())
            continue
        for q, n in sample_parameters(rec, samples):
            o = verify_witness(rec, q, n)
            where = f"q={q}" + (f", n={n}" if n is not None and rec.has_rank else "")
            integral_divides = o.status != "skipped-nonintegral" and o.divides
            r.add(integral_divides, f"{rec.name} at {where}: integral degree dividing the order")
            r.lines.append(f"       factor status: {o.status}{' (' + o.note + ')' if o.note else ''}")


def check_psl2_gcd(r: CheckResult, **_):
    bad = []
    count = 0
    for q in range(4, 102):
        if prime_power(q) is None:
            continue
        count += 1
        order = psl2_order(q)
        for deg in white_degree_set(_psl(q)).degrees:
            if deg > 1 and math.gcd(deg, order // deg) not in (1, 2):
                bad.append(f"q={q}, degree {deg}")
    r.add(not bad, f"gcd(D, |PSL2(q)|/D) in {{1, 2}} for every nonunit degree, {count} prime powers 3 < q <= 101" + (": " + ", ".join(bad) if bad else ""))


def _klein_four(degree=4):
    return PermutationGroup(
        degree, [Permutation.from_cycles("(1 2)(3 4)", degree), Permutation.from_cycles("(1 3)(2 4)", degree)]
    )


def check_clifford(r: CheckResult, **_):
    pairs = [
        ("Sym(5)", construct("Sym(5)"), construct("Alt(5)")),
        ("Sym(6)", construct("Sym(6)"), construct("Alt(6)")),
        ("M10", construct("named:M10"), projective_line_group(9)),
    ]
    for name, g, n in pairs:
        res = clifford_divisibility_check(g, n)
        r.add(res.holds, f"{name} over its index-2 subgroup: divisibility holds" + ("" if res.holds else f", fails at row {res.counterexample}"))
    quotients = [
        ("Sym(4)/V4", construct("Sym(4)"), _klein_four()),
        ("Sym(4)/Alt(4)", construct("Sym(4)"), construct("Alt(4)")),
        ("Alt(4)/V4", construct("Alt(4)"), _klein_four()),
    ]
    for name, g, n in quotients:
        pairs_ = quotient_codegree_pairs(g, n)
        ok = all(a == b for _, a, b in pairs_)
        r.add(ok, f"{name}: codegrees in G and G/N " + ", ".join(f"{a}={b}" if a == b else f"{a}!={b}" for _, a, b in pairs_))


def check_fourth_power_free(r: CheckResult, **_):
    cases = [("J1", True), ("Alt(5)", True), ("Alt(6)", True), ("Alt(7)", True), ("Sz(8)", True), ("Alt(8)", False)]
    r.add(simple_group_order("J1") == 175560, "|J1| = 175560 = 2^3*3*5*7*11*19")
    for ident, expected in cases:
        order = simple_group_order(ident)
        r.add(fourth_power_free(order) == expected, f"|{ident}| = {order} fourth-power-free: {fourth_power_free(order)}")


def check_sz8(r: CheckResult, **_):
    r.add(lie_group_order("2B2", q=8) == 29120, "|Sz(8)| = 29120")
    for spec in ("named:Sz8", "named:AutSz8"):
        _progress(f"  sz8: {spec}")
        g = construct(spec)
        t = character_table(g)
        ok, diags = verify_table(t)
        r.add(ok, f"{spec}: table of order {g.order} passes the orthogonality checks" + ("" if ok else f" ({diags[:2]})"))
        v = square_free_hypothesis(t, spec)
        r.add(v.satisfies, f"{spec}: {'satisfies' if v.satisfies else f'fails, witness {v.witness}'}")
    simple = character_table(construct("named:Sz8"))
    r.add(all(codegree(simple, i) * d == simple.order for i, d in enumerate(simple.degrees) if i), "nonlinear codegrees of Sz(8) are |G|/chi(1)")


# id -> (claim text, function)
CHECKS: dict[str, tuple[str, Callable]] = {
    "a8-witness": ("Alt(8) has a degree-20 character with codegree 1008 and gcd 4", check_a8_witness),
    "classification": ("the classification list at computable scale: which groups satisfy the hypothesis", check_classification),
    "white": ("White's degree sets agree with computed tables of PSL2(q) and PGL2(q)", check_white),
    "psl2-conditions": ("the arithmetic conditions on extensions of PSL2(q) agree with brute force", check_psl2_conditions),
    "an-witness": ("hook-length degrees, the Alt(n) witness characters and their codegrees", check_an_witness),
    "sporadic": ("the sporadic witness degrees", check_sporadic),
    "lie-tables": ("the Lie-type witness degrees", check_lie_tables),
    "psl2-gcd": ("PSL2(q) degrees give gcd 1 or 2", check_psl2_gcd),
    "clifford": ("codegree divisibility over normal subgroups and invariance under quotients", check_clifford),
    "fourth-power-free": ("fourth-power-free orders of J1, Alt(5..7), Sz(8), but not Alt(8)", check_fourth_power_free),
    "sz8": ("Sz(8) and Aut(Sz(8)) satisfy the hypothesis", check_sz8),
}


def check_ids() -> list[str]:
    return list(CHECKS)


def run_checks(only=None, data=None, samples=3, progress=True) -> list[CheckResult]:
    ids = list(CHECKS) if not only else list(only)
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check id(s): {', '.join(unknown)}")
    results = []
    for cid in ids:
        claim, fn = CHECKS[cid]
        if progress:
            _progress(f"running {cid} ...")
        res = CheckResult(cid, claim)
        t0 = time.perf_counter()
        try:
            fn(res, data=data, samples=samples)
        except Exception as exc:  # a crash is reported as a named failure, not a traceback
            res.add(False, f"error: {type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return results
