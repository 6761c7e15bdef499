"""Witness degrees for simple groups, parsed from the bundled tables and checked arithmetically.

The bundled degrees are trusted inputs. Nothing here proves that a listed
degree belongs to an irreducible character; only the arithmetic claims are
checked (the degree divides the order, and the stated square divides
gcd(degree, order/degree)).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .fields import prime_power
from .orders import LIE_FAMILIES, cyclotomic_poly_eval, lie_group_order

__all__ = [
    "Num",
    "Var",
    "Phi",
    "BinOp",
    "Neg",
    "Expr",
    "ExprSyntaxError",
    "NonIntegralError",
    "parse_degree_expr",
    "format_expr",
    "evaluate",
    "Constraint",
    "parse_constraint",
    "WitnessRecord",
    "WitnessFormatError",
    "load_witnesses",
    "bundled_witness_path",
    "VerificationOutcome",
    "verify_witness",
    "sample_parameters",
    "verify_all",
    "WITNESS_FORMAT",
]

WITNESS_FORMAT = 1


# -- expressions ------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str  # "q" or "n"


@dataclass(frozen=True)
class Phi:
    k: int


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


Expr = Num | Var | Phi | BinOp | Neg


class ExprSyntaxError(ValueError):
    def __init__(self, msg, position):
        super().__init__(f"{msg} at position {position}")
        self.position = position


class NonIntegralError(ArithmeticError):
    """An expression does not evaluate to an integer at the given parameters."""


_TOKEN = re.compile(r"\s*(?:(\d+)|(phi_?\{?(\d+)\}?)|([qn])|(\*\*|[-+*/^(){}·⋅]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ExprSyntaxError(f"unknown token {text[bad]!r}", bad)
        start = m.start(0) + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            out.append(("phi", int(m.group(3)), start))
        elif m.group(4):
            out.append(("var", m.group(4), start))
        else:
            op = {"**": "^", "·": "*", "⋅": "*", "{": "(", "}": ")"}.get(m.group(5), m.group(5))
            out.append(("op", op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _ExprParser:
    """Precedence: sums < products (explicit or juxtaposed) < unary minus < powers (right assoc)."""

    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)

    def sum(self):
        node = self.product()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = BinOp(op, node, self.product())
        return node

    def _starts_atom(self):
        kind, val, _ = self.peek()
        return kind in ("num", "phi", "var") or (kind == "op" and val == "(")

    def product(self):
        node = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                node = BinOp(val, node, self.unary())
            elif self._starts_atom():
                node = BinOp("*", node, self.power())
            else:
                return node

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            return BinOp("^", base, self.unary())
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Num(val)
        if kind == "var":
            return Var(val)
        if kind == "phi":
            if val < 1:
                raise ExprSyntaxError("cyclotomic index must be positive", pos)
            return Phi(val)
        if kind == "op" and val == "(":
            node = self.sum()
            self.expect(")")
            return node
        raise ExprSyntaxError("unexpected end of expression" if kind == "end" else f"unexpected {val!r}", pos)


def parse_degree_expr(text: str) -> Expr:
    """Parse e.g. ``q^3(q^2+q+1)``, ``2^2*3^4`` or ``1/2 q^3 phi1^4 phi3^2``."""
    p = _ExprParser(text)
    node = p.sum()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected {val!r}", pos)
    return node


def format_expr(e: Expr) -> str:
    """Fully parenthesized text that parses back to the same tree."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Phi):
        return f"phi{e.k}"
    if isinstance(e, Neg):
        return f"(-{format_expr(e.operand)})"
    return f"({format_expr(e.left)}{e.op}{format_expr(e.right)})"


def _exact_root(x: Fraction, k: int) -> Fraction:
    if x < 0:
        raise NonIntegralError(f"root of negative value {x}")
    roots = [_iroot(v, k) for v in (x.numerator, x.denominator)]
    if roots[0] ** k != x.numerator or roots[1] ** k != x.denominator:
        raise NonIntegralError(f"{x} is not a perfect {k}-th power")
    return Fraction(roots[0], roots[1])


def _iroot(v, k):
    lo, hi = 0, 1 << (v.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= v:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _eval(e: Expr, env: dict[str, int]) -> Fraction:
    if isinstance(e, Num):
        return Fraction(e.value)
    if isinstance(e, Var):
        if e.name not in env:
            raise ValueError(f"parameter {e.name} is not bound")
        return Fraction(env[e.name])
    if isinstance(e, Phi):
        if "q" not in env:
            raise ValueError(f"phi{e.k} needs a value for q")
        return Fraction(cyclotomic_poly_eval(e.k, env["q"]))
    if isinstance(e, Neg):
        return -_eval(e.operand, env)
    a = _eval(e.left, env)
    b = _eval(e.right, env)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    if e.op == "/":
        if b == 0:
            raise ZeroDivisionError("division by zero in expression")
        return a / b
    # power: integer exponents directly, rational ones through exact roots
    if b.denominator == 1:
        return a ** int(b)
    return _exact_root(a, b.denominator) ** b.numerator


def evaluate(e: Expr, q: int | None = None, n: int | None = None) -> int:
    """Exact integer value; raises NonIntegralError when the value is not an integer."""
    env = {k: v for k, v in (("q", q), ("n", n)) if v is not None}
    value = _eval(e, env)
    if value.denominator != 1:
        raise NonIntegralError(f"expression evaluates to {value}")
    return value.numerator


# -- parameter constraints ----------------------------------------------------------

_CLAUSE = re.compile(r"^(n|q)(>=|>|=|%(\d+)=)(\d+)$|^q (odd|even)$|^q=(\d+)\^odd$")


@dataclass(frozen=True)
class Constraint:
    """Conjunction of clauses such as ``n>4``, ``q>4``, ``q%4=1``, ``q odd``, ``q=2^odd``."""

    clauses: tuple[str, ...]

    def holds(self, q: int | None, n: int | None) -> bool:
        for c in self.clauses:
            m = _CLAUSE.match(c)
            if m.group(5):
                if q is None or (q % 2 == 1) != (m.group(5) == "odd"):
                    return False
                continue
            if m.group(6):
                base = int(m.group(6))
                pf = prime_power(q) if q else None
                if pf is None or pf[0] != base or pf[1] % 2 == 0:
                    return False
                continue
            var, op, mod, rhs = m.group(1), m.group(2), m.group(3), int(m.group(4))
            val = q if var == "q" else n
            if val is None:
                return False
            if mod:
                ok = val % int(mod) == rhs
            elif op == ">":
                ok = val > rhs
            elif op == ">=":
                ok = val >= rhs
            else:
                ok = val == rhs
            if not ok:
                return False
        return True

    def fixed_rank(self) -> int | None:
        for c in self.clauses:
            if c.startswith("n=") and c[2:].isdigit():
                return int(c[2:])
        return None

    def __str__(self):
        return ";".join(self.clauses) if self.clauses else "-"


def parse_constraint(text: str) -> Constraint:
    text = text.strip()
    if text in ("", "-"):
        return Constraint(())
    clauses = tuple(c.strip() for c in text.split(";"))
    for c in clauses:
        if not _CLAUSE.match(c):
            raise ValueError(f"malformed constraint clause {c!r}")
    return Constraint(clauses)


# -- witness records ---------------------------------------------------------------

KINDS = ("sporadic", "lieFixed", "lieFamily")


@dataclass(frozen=True)
class WitnessRecord:
    name: str
    kind: str
    order: int | None  # exact order for sporadic and fixed Lie rows
    family: str | None  # order-formula tag for family rows
    constraint: Constraint
    degree: Expr
    factor: Expr
    line: int = 0

    @property
    def uses_q(self) -> bool:
        return self.kind == "lieFamily"

    @property
    def has_rank(self) -> bool:
        return self.family is not None and LIE_FAMILIES[self.family][1] is not None


class WitnessFormatError(ValueError):
    def __init__(self, source, line, msg):
        super().__init__(f"{source}:{line}: {msg}")
        self.line = line


def bundled_witness_path():
    return resources.files("sqfchar.data").joinpath("witnesses.tsv")


def load_witnesses(path=None) -> list[WitnessRecord]:
    """Read a ``witness-format: 1`` file; the bundled tables when ``path`` is None."""
    if path is None:
        source = "witnesses.tsv"
        text = bundled_witness_path().read_text(encoding="utf-8")
    else:
        source = str(path)
        text = Path(path).read_text(encoding="utf-8")
    records = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*witness-format:\s*(\S+)", line)
            if m:
                if m.group(1) != str(WITNESS_FORMAT):
                    raise WitnessFormatError(source, lineno, f"unsupported witness-format {m.group(1)}")
                seen_header = True
            continue
        if not seen_header:
            raise WitnessFormatError(source, lineno, "missing '# witness-format: 1' header")
        fields = [f.strip() for f in raw.split("\t")]
        if len(fields) != 6:
            raise WitnessFormatError(source, lineno, f"expected 6 tab-separated fields, got {len(fields)}")
        name, kind, order_src, constraint, degree, factor = fields
        try:
            if kind not in KINDS:
                raise ValueError(f"unknown kind {kind!r}")
            cons = parse_constraint(constraint)
            deg = parse_degree_expr(degree)
            fac = parse_degree_expr(factor)
            if kind == "lieFamily":
                if order_src not in LIE_FAMILIES:
                    raise ValueError(f"unknown order family {order_src!r}")
                rec = WitnessRecord(name, kind, None, order_src, cons, deg, fac, lineno)
                if rec.has_rank and not any(c.startswith("n") for c in cons.clauses):
                    raise ValueError("family with a rank parameter needs an n constraint")
            else:
                order = evaluate(parse_degree_expr(order_src))
                rec = WitnessRecord(name, kind, order, None, cons, deg, fac, lineno)
                evaluate(deg)
        except (ValueError, ArithmeticError) as exc:
            raise WitnessFormatError(source, lineno, str(exc)) from None
        records.append(rec)
    return records


# -- verification -------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationOutcome:
    record: WitnessRecord
    q: int | None
    n: int | None
    degree: int | None
    order: int | None
    divides: bool
    factor_holds: bool
    status: str  # confirmed | discrepancy | skipped-nonintegral
    gcd: int | None = None
    factor: int | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.record.name,
            "line": self.record.line,
            "q": self.q,
            "n": self.n,
            "degree": self.degree,
            "order": self.order,
            "gcd": self.gcd,
            "factor": self.factor,
            "divides": self.divides,
            "factorHolds": self.factor_holds,
            "status": self.status,
            "note": self.note,
        }


def _effective_factor(rec: WitnessRecord, q: int | None, n: int | None) -> int:
    """The square the row claims divides the gcd; a claimed q^2 means p^2 for q = p^f."""
    if rec.factor == BinOp("^", Var("q"), Num(2)):
        p = prime_power(q)[0]
        return p * p
    return evaluate(rec.factor, q, n)


def _has_square_prime_factor(g: int) -> bool:
    p = 2
    while p * p <= g:
        if g % (p * p) == 0:
            return True
        while g % p == 0:
            g //= p
        p += 1
    return False


def verify_witness(rec: WitnessRecord, q: int | None = None, n: int | None = None) -> VerificationOutcome:
    if rec.kind == "lieFamily":
        if q is None:
            raise ValueError(f"{rec.name}: family row needs a value of q")
        if rec.has_rank and n is None:
            n = rec.constraint.fixed_rank()
            if n is None:
                raise ValueError(f"{rec.name}: family row needs a rank n")
        if not rec.constraint.holds(q, n):
            raise ValueError(f"{rec.name}: (q={q}, n={n}) violates constraint {rec.constraint}")
        order = lie_group_order(rec.family, n if rec.has_rank else None, q)
    else:
        q = n = None
        order = rec.order
    try:
        degree = evaluate(rec.degree, q, n)
    except NonIntegralError as exc:
        return VerificationOutcome(rec, q, n, None, order, False, False, "skipped-nonintegral", note=str(exc))
    divides = degree > 0 and order % degree == 0
    if not divides:
        return VerificationOutcome(rec, q, n, degree, order, False, False, "discrepancy", note="degree does not divide order")
    g = math.gcd(degree, order // degree)
    factor = _effective_factor(rec, q, n)
    holds = g % factor == 0 and _has_square_prime_factor(factor)
    status = "confirmed" if holds else "discrepancy"
    note = "" if holds else f"claimed factor {factor} does not divide gcd {g}"
    return VerificationOutcome(rec, q, n, degree, order, True, holds, status, g, factor, note)


def _prime_powers_from(start: int):
    q = start
    while True:
        if prime_power(q) is not None:
            yield q
        q += 1


def sample_parameters(rec: WitnessRecord, count: int = 3) -> list[tuple[int | None, int | None]]:
    """Smallest (q, n) points satisfying the row's constraint.

    Rows without a free rank take the ``count`` smallest admissible q. Rows with
    a free rank n take (q0, n0), (q1, n0), (q0', n0 + 1), continuing with larger
    q at n0 and then larger ranks.
    """
    if rec.kind != "lieFamily":
        return [(None, None)]
    fixed = rec.constraint.fixed_rank()
    if not rec.has_rank or fixed is not None:
        return [(q, fixed) for q in _admissible_q(rec, fixed, count)]
    n0 = next(n for n in itertools.count(LIE_FAMILIES[rec.family][1]) if _rank_ok(rec, n))
    q0, q1 = _admissible_q(rec, n0, 2)
    points = [(q0, n0), (q1, n0), (_admissible_q(rec, n0 + 1, 1)[0], n0 + 1)]
    more = _admissible_q(rec, n0, count)[2:]
    points += [(q, n0) for q in more]
    return points[:count]


def _admissible_q(rec, n, k):
    out = []
    for q in _prime_powers_from(2):
        if rec.constraint.holds(q, n) and _simple(rec, n, q):
            out.append(q)
            if len(out) == k:
                return out


def _rank_ok(rec, n):
    return all(not c.startswith("n") or Constraint((c,)).holds(2, n) for c in rec.constraint.clauses)


def _simple(rec, n, q):
    try:
        lie_group_order(rec.family, n if rec.has_rank else None, q)
    except ValueError:
        return False
    return True


def verify_all(records: list[WitnessRecord], samples: int = 3) -> list[VerificationOutcome]:
    out = []
    for rec in records:
        for q, n in sample_parameters(rec, samples):
            out.append(verify_witness(rec, q, n))
    return out
