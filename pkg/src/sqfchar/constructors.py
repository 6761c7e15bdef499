"""Group specifications with their text grammar, and the permutation groups they describe.

Grammar (whitespace-insensitive)::

    Alt(n) | Sym(n) | PSL2(q) | PGL2(q) | named:<id> | prod(<spec>,<spec>)
    perm:deg=<d>;gens=<cycles>[,<cycles>...]

Cycle strings are 1-based, e.g. ``(1 2 3)(4 5)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Union

from .fields import field, prime_power
from .group import PermutationGroup
from .perm import CycleSyntaxError, Permutation, parse_cycles

__all__ = [
    "Alt",
    "Sym",
    "PSL2",
    "PGL2",
    "Named",
    "DirectProduct",
    "RawGenerators",
    "GroupSpec",
    "SpecError",
    "parse_spec",
    "construct",
    "projective_line_group",
    "NAMED_GROUPS",
]


class SpecError(ValueError):
    """Malformed or invalid group specification."""


@dataclass(frozen=True)
class Alt:
    n: int

    def __str__(self):
        return f"Alt({self.n})"


@dataclass(frozen=True)
class Sym:
    n: int

    def __str__(self):
        return f"Sym({self.n})"


@dataclass(frozen=True)
class PSL2:
    q: int

    def __str__(self):
        return f"PSL2({self.q})"


@dataclass(frozen=True)
class PGL2:
    q: int

    def __str__(self):
        return f"PGL2({self.q})"


@dataclass(frozen=True)
class Named:
    ident: str

    def __str__(self):
        return f"named:{self.ident}"


@dataclass(frozen=True)
class DirectProduct:
    left: "GroupSpec"
    right: "GroupSpec"

    def __str__(self):
        return f"prod({self.left},{self.right})"


@dataclass(frozen=True)
class RawGenerators:
    degree: int
    cycles: tuple[str, ...]

    def __str__(self):
        return f"perm:deg={self.degree};gens=" + ",".join(self.cycles)


GroupSpec = Union[Alt, Sym, PSL2, PGL2, Named, DirectProduct, RawGenerators]

# id -> data file; aliases map to the same file
NAMED_GROUPS = {
    "A6": "A6.txt",
    "S6": "S6.txt",
    "M10": "M10.txt",
    "PGL2_9": "PGL2_9.txt",
    "AutA6": "AutA6.txt",
    "Aut(PSL2(9))": "AutA6.txt",
    "Aut(A6)": "AutA6.txt",
    "Sz8": "Sz8.txt",
    "AutSz8": "AutSz8.txt",
    "Aut(Sz8)": "AutSz8.txt",
}


# -- parsing ------------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.s = text
        self.i = 0

    def error(self, msg):
        raise SpecError(f"{msg} at position {self.i} in {self.s!r}")

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, tok):
        self.ws()
        if not self.s.startswith(tok, self.i):
            self.error(f"expected {tok!r}")
        self.i += len(tok)

    def word(self):
        self.ws()
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(self.s, self.i)
        if not m:
            self.error("expected a name")
        self.i = m.end()
        return m.group(0)

    def integer(self):
        self.ws()
        m = re.compile(r"\d+").match(self.s, self.i)
        if not m:
            self.error("expected an integer")
        self.i = m.end()
        return int(m.group(0))

    def spec(self):
        head = self.word()
        key = head.lower()
        if key in ("alt", "sym", "psl2", "pgl2"):
            self.expect("(")
            k = self.integer()
            self.expect(")")
            return {"alt": Alt, "sym": Sym, "psl2": PSL2, "pgl2": PGL2}[key](k)
        if key == "named":
            self.expect(":")
            return Named(self.named_id())
        if key == "prod":
            self.expect("(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return DirectProduct(left, right)
        if key == "perm":
            self.expect(":")
            if self.word().lower() != "deg":
                self.error("expected 'deg'")
            self.expect("=")
            deg = self.integer()
            self.expect(";")
            if self.word().lower() != "gens":
                self.error("expected 'gens'")
            self.expect("=")
            gens = [self.cycles()]
            while True:
                save = self.i
                if self.peek() == ",":
                    self.i += 1
                    if self.peek() == "(":
                        gens.append(self.cycles())
                        continue
                self.i = save
                break
            return RawGenerators(deg, tuple(gens))
        self.error(f"unknown group constructor {head!r}")

    def named_id(self):
        self.ws()
        start = self.i
        depth = 0
        while self.i < len(self.s):
            c = self.s[self.i]
            if c == "(":
                depth += 1
            elif c == ")":
                if depth == 0:
                    break
                depth -= 1
            elif c == "," and depth == 0:
                break
            self.i += 1
        ident = re.sub(r"\s+", "", self.s[start : self.i])
        if not ident:
            self.error("empty named-group identifier")
        return ident

    def cycles(self):
        self.ws()
        start = self.i
        while self.peek() == "(":
            close = self.s.find(")", self.i)
            if close < 0:
                self.error("unclosed cycle")
            self.i = close + 1
        text = self.s[start : self.i]
        if not text:
            self.error("expected a cycle")
        return re.sub(r"\s+", " ", text).replace("( ", "(").replace(" )", ")").strip()


def parse_spec(text: str) -> GroupSpec:
    p = _Parser(text)
    spec = p.spec()
    if p.peek():
        p.error("trailing input")
    return spec


# -- constructions ------------------------------------------------------------


def _cycle_perm(points, degree):
    images = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a] = b
    return Permutation(tuple(images))


def symmetric_group(n: int) -> PermutationGroup:
    if n < 1:
        raise SpecError("Sym(n) needs n >= 1")
    gens = []
    if n >= 2:
        gens = [_cycle_perm(list(range(n)), n), _cycle_perm([0, 1], n)]
    return PermutationGroup(n, gens, name=f"Sym({n})")


def alternating_group(n: int) -> PermutationGroup:
    if n < 1:
        raise SpecError("Alt(n) needs n >= 1")
    gens = []
    if n >= 3:
        gens = [_cycle_perm([0, 1, 2], n)]
        if n >= 4:
            long = list(range(n)) if n % 2 else list(range(1, n))
            gens.append(_cycle_perm(long, n))
    return PermutationGroup(n, gens, name=f"Alt({n})")


def _mobius(F, a, b, c, d, frob=0):
    """Permutation of the projective line x -> (a x^(p^frob) + b)/(c x^(p^frob) + d); infinity is point q."""
    q = F.q
    inf = q
    images = []
    for x in range(q + 1):
        if x != inf:
            for _ in range(frob):
                x = F.frobenius(x)
        if x == inf:
            images.append(inf if c == 0 else int(F.mul[a, F.inv[c]]))
            continue
        num = int(F.add[F.mul[a, x], b])
        den = int(F.add[F.mul[c, x], d])
        images.append(inf if den == 0 else int(F.mul[num, F.inv[den]]))
    return Permutation(tuple(images))


def projective_line_group(q: int, delta: bool = False, field_power: int = 0, twisted: bool = False, name=None):
    """Group between PSL2(q) and its automorphism group, acting on the q+1 projective points.

    ``delta`` adds the diagonal automorphism; ``field_power = k > 0`` adds the field
    automorphism x -> x^(p^k), composed with the diagonal one when ``twisted``.
    """
    pf = prime_power(q)
    if pf is None or q <= 3:
        raise SpecError(f"q = {q} must be a prime power > 3")
    F = field(q)
    w = F.primitive
    minus_one = int(F.neg[1])
    gens = [_mobius(F, 1, 1, 0, 1), _mobius(F, 0, minus_one, 1, 0)]
    if F.f > 1:
        gens.append(_mobius(F, int(F.mul[w, w]), 0, 0, 1))
    if delta:
        gens.append(_mobius(F, w, 0, 0, 1))
    if field_power:
        a = w if twisted else 1
        gens.append(_mobius(F, a, 0, 0, 1, frob=field_power))
    return PermutationGroup(q + 1, gens, name=name)


def _load_named(ident: str) -> PermutationGroup:
    fname = NAMED_GROUPS.get(ident)
    if fname is None:
        raise SpecError(f"unknown named group {ident!r}; known: {sorted(set(NAMED_GROUPS))}")
    text = resources.files("sqfchar.data.groups").joinpath(fname).read_text()
    degree = None
    declared_order = None
    gens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(":")
        key = key.strip()
        if key == "degree":
            degree = int(value)
        elif key == "gen":
            if degree is None:
                raise SpecError(f"{fname}:{lineno}: generator before degree")
            gens.append(Permutation(parse_cycles(value, degree)))
        elif key == "order":
            declared_order = int(value)
        else:
            raise SpecError(f"{fname}:{lineno}: unknown key {key!r}")
    if degree is None:
        raise SpecError(f"{fname}: missing degree")
    group = PermutationGroup(degree, gens, name=f"named:{ident}")
    if declared_order is not None and group.order != declared_order:
        raise SpecError(f"{fname}: generators give order {group.order}, file declares {declared_order}")
    return group


def _direct_product(a: PermutationGroup, b: PermutationGroup) -> PermutationGroup:
    n, m = a.degree, b.degree
    gens = [Permutation(g.images + tuple(range(n, n + m))) for g in a.generators]
    gens += [Permutation(tuple(range(n)) + tuple(n + i for i in g.images)) for g in b.generators]
    return PermutationGroup(n + m, gens)


def construct(spec: GroupSpec | str) -> PermutationGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, Sym):
        g = symmetric_group(spec.n)
    elif isinstance(spec, Alt):
        g = alternating_group(spec.n)
    elif isinstance(spec, PSL2):
        g = projective_line_group(spec.q)
    elif isinstance(spec, PGL2):
        g = projective_line_group(spec.q, delta=True)
    elif isinstance(spec, Named):
        g = _load_named(spec.ident)
    elif isinstance(spec, DirectProduct):
        g = _direct_product(construct(spec.left), construct(spec.right))
    elif isinstance(spec, RawGenerators):
        if spec.degree < 1:
            raise SpecError("perm: degree must be >= 1")
        try:
            gens = [Permutation(parse_cycles(c, spec.degree)) for c in spec.cycles]
        except CycleSyntaxError as exc:
            raise SpecError(str(exc)) from None
        g = PermutationGroup(spec.degree, gens)
    else:
        raise SpecError(f"not a group spec: {spec!r}")
    g.name = str(spec)
    return g
