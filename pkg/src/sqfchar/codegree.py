"""Codegrees from character kernels, and the square-free gcd test on a character table."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .chartab import CharacterTable, character_table, restriction_matrix
from .cyclotomic import canonical
from .group import PermutationGroup
from .perm import Permutation

__all__ = [
    "KernelInfo",
    "GcdRow",
    "GcdReport",
    "HypothesisVerdict",
    "CliffordResult",
    "CodegreeError",
    "kernel",
    "codegree",
    "gcd_report",
    "square_free_hypothesis",
    "clifford_divisibility_check",
    "smallest_square_prime",
    "quotient_codegree_pairs",
    "report_to_dicts",
    "format_report",
    "REPORT_COLUMNS",
]

REPORT_COLUMNS = ("degree", "kernelIndex", "codegree", "gcd", "squareFree", "offendingPrime")


class CodegreeError(ArithmeticError):
    """Non-integral codegree: the table is defective."""


@dataclass(frozen=True)
class KernelInfo:
    class_indices: frozenset[int]
    order: int


@dataclass(frozen=True)
class GcdRow:
    degree: int
    kernel_index: int
    codegree: int
    gcd: int
    square_free: bool
    offending_prime: int | None


@dataclass(frozen=True)
class GcdReport:
    group_order: int
    rows: tuple[GcdRow, ...]

    @property
    def square_free(self) -> bool:
        return all(r.square_free for r in self.rows)


@dataclass(frozen=True)
class HypothesisVerdict:
    spec: str
    satisfies: bool
    witness: tuple[int, int, int] | None  # (degree, codegree, offending prime)


def smallest_square_prime(n: int) -> int | None:
    """Smallest prime p with p^2 | n, by trial division."""
    p = 2
    while p * p <= n:
        if n % p == 0:
            if n % (p * p) == 0:
                return p
            while n % p == 0:
                n //= p
        p += 1
    return None


def kernel(t: CharacterTable, row: int) -> KernelInfo:
    """Classes on which the character takes the value of its degree."""
    canon = t.canonical_values[row]
    at_one = canon[0]
    idx = frozenset(int(c) for c in range(len(t.classes)) if np.array_equal(canon[c], at_one))
    return KernelInfo(idx, sum(t.classes.sizes[c] for c in idx))


def codegree(t: CharacterTable, row: int) -> int:
    ker = kernel(t, row)
    index = t.order // ker.order
    q, r = divmod(index, t.degrees[row])
    if r or t.order % ker.order:
        raise CodegreeError(f"|G:ker| = {index} is not divisible by the degree {t.degrees[row]}")
    return q


def gcd_report(t: CharacterTable) -> GcdReport:
    rows = []
    for i, d in enumerate(t.degrees):
        cd = codegree(t, i)
        g = math.gcd(d, cd)
        bad = smallest_square_prime(g)
        rows.append(GcdRow(d, d * cd, cd, g, bad is None, bad))
    return GcdReport(t.order, tuple(rows))


def square_free_hypothesis(t: CharacterTable, spec: str | None = None) -> HypothesisVerdict:
    report = gcd_report(t)
    witness = next(((r.degree, r.codegree, r.offending_prime) for r in report.rows if not r.square_free), None)
    return HypothesisVerdict(spec or t.group.name or "", witness is None, witness)


# -- Clifford / quotient harness ---------------------------------------------------


@dataclass(frozen=True)
class CliffordResult:
    holds: bool
    counterexample: int | None  # row of the normal subgroup's table


def clifford_divisibility_check(
    g: PermutationGroup, n: PermutationGroup, tg: CharacterTable | None = None, tn: CharacterTable | None = None
) -> CliffordResult:
    """Every psi in Irr(N) lies under some chi in Irr(G) with psi(1) | chi(1) and psi^c(1) | chi^c(1)."""
    tg = tg or character_table(g)
    tn = tn or character_table(n)
    mults = restriction_matrix(tg, n, tn)
    cg = [codegree(tg, i) for i in range(len(tg))]
    cn = [codegree(tn, j) for j in range(len(tn))]
    for j in range(len(tn)):
        ok = any(
            mults[i, j] and tg.degrees[i] % tn.degrees[j] == 0 and cg[i] % cn[j] == 0 for i in range(len(tg))
        )
        if not ok:
            return CliffordResult(False, j)
    return CliffordResult(True, None)


class _CosetAction:
    """Action of ``g`` on the right cosets of a normal subgroup ``n``.

    ``coset[i]`` is the coset index of element row ``i``; ``quotient`` is the
    resulting regular permutation representation of G/N.
    """

    def __init__(self, g: PermutationGroup, n: PermutationGroup):
        self.g = g
        elems = g.elements
        nel = n.elements
        coset = np.full(len(elems), -1, dtype=np.int64)
        firsts = []
        for i in range(len(elems)):
            if coset[i] >= 0:
                continue
            # (m x)[j] = x[m[j]] for m in N
            coset[g.index_of(elems[i][nel])] = len(firsts)
            firsts.append(i)
        self.coset = coset
        self.reps = elems[np.array(firsts, dtype=np.int64)]
        gens = [self.image(np.array(s.images)) for s in g.generators]
        self.quotient = PermutationGroup(len(firsts), gens, name=f"{g.name}/N")

    def image(self, x: np.ndarray) -> Permutation:
        prods = self.g.index_of(np.asarray(x, dtype=np.int64)[self.reps])
        return Permutation(tuple(int(c) for c in self.coset[prods]))


def quotient_codegree_pairs(g: PermutationGroup, n: PermutationGroup) -> list[tuple[int, int, int]]:
    """For each character of G/N: (row in G's table, codegree in G, codegree in G/N).

    Quotient characters are inflated to G and matched by exact values.
    """
    tg = character_table(g)
    action = _CosetAction(g, n)
    quot = action.quotient
    tq = character_table(quot)
    qcls = [tq.classes.class_of(quot, action.image(g.elements[i])) for i in tg.classes.rep_indices]
    e = math.lcm(tg.e, tq.e)
    gvals = np.zeros((len(tg), len(tg.classes), e), dtype=np.int64)
    gvals[:, :, :: e // tg.e] = tg.values
    gcan = canonical(gvals)
    out = []
    for j in range(len(tq)):
        inflated = np.zeros((len(tg.classes), e), dtype=np.int64)
        inflated[:, :: e // tq.e] = tq.values[j][qcls]
        ican = canonical(inflated)
        match = [i for i in range(len(tg)) if np.array_equal(gcan[i], ican)]
        if len(match) != 1:
            raise CodegreeError(f"quotient character {j} does not inflate to a unique character")
        i = match[0]
        out.append((i, codegree(tg, i), codegree(tq, j)))
    return out


# -- output ------------------------------------------------------------------------


def report_to_dicts(report: GcdReport) -> list[dict]:
    keys = dict(zip(("degree", "kernel_index", "codegree", "gcd", "square_free", "offending_prime"), REPORT_COLUMNS))
    return [{keys[k]: v for k, v in asdict(r).items()} for r in report.rows]


def format_report(report: GcdReport, structured: bool = False, spec: str = "") -> str:
    rows = report_to_dicts(report)
    if structured:
        return json.dumps({"group": spec, "order": report.group_order, "columns": list(REPORT_COLUMNS), "rows": rows})
    grid = [list(REPORT_COLUMNS)] + [["-" if r[c] is None else str(r[c]) for c in REPORT_COLUMNS] for r in rows]
    widths = [max(len(row[j]) for row in grid) for j in range(len(REPORT_COLUMNS))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in grid)
