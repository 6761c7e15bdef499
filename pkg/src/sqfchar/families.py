"""Degree formulas for symmetric/alternating groups and for extensions of PSL2(q).

Partitions give the Sym(n) degrees through the hook-length formula. For
``PSL2(q) <= H <= Aut(PSL2(q))`` the degree set is produced from White's
description (the five exceptions are applied explicitly and recorded), and
:func:`psl2_squarefree_conditions` evaluates the arithmetic conditions under
which every gcd(chi(1), chi^c(1)) is square-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .constructors import projective_line_group
from .fields import is_prime
from .group import PermutationGroup, prime_divisors
from .orders import fourth_power_free, simple_group_order

__all__ = [
    "Partition",
    "partitions",
    "hook_length_product",
    "partition_degree",
    "conjugate_partition",
    "is_self_conjugate",
    "AnWitness",
    "an_witness",
    "COSET_TYPES",
    "Psl2Config",
    "ConfigError",
    "DegreeSetResult",
    "white_degree_set",
    "Psl2Verdict",
    "psl2_squarefree_conditions",
    "psl2_enumerate_subgroups",
    "psl2_config_group",
    "psl2_order",
    "simple_group_order",
    "fourth_power_free",
]


# -- partitions -------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts or parts[-1] < 1 or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order starting from (n)."""
    if n < 1:
        raise ValueError("n must be positive")

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def conjugate_partition(lam: Partition) -> Partition:
    return Partition(tuple(sum(1 for x in lam.parts if x > i) for i in range(lam.parts[0])))


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate_partition(lam) == lam


def hook_length_product(lam: Partition) -> int:
    cols = conjugate_partition(lam).parts
    prod = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            prod *= (row - j - 1) + (cols[j] - i - 1) + 1
    return prod


def partition_degree(lam: Partition) -> int:
    deg, rem = divmod(math.factorial(lam.n), hook_length_product(lam))
    if rem:
        raise ArithmeticError(f"hook product of {lam} does not divide {lam.n}!")
    return deg


@dataclass(frozen=True)
class AnWitness:
    partition: Partition
    degree: int
    closed_form: int
    codegree: int  # in Alt(n), where the restriction stays irreducible
    codegree_closed_form: int | None  # only for the witness whose gcd is divisible by 4


def an_witness(n: int) -> tuple[AnWitness, AnWitness, AnWitness]:
    """Characters (n-3,2,1), (n-3,1,1,1), (n-2,2) of Sym(n), checked against closed forms."""
    if n < 8:
        raise ValueError("an_witness needs n >= 8")
    half_order = math.factorial(n) // 2
    forms = [
        (Partition((n - 3, 2, 1)), n * (n - 2) * (n - 4) // 3),
        (Partition((n - 3, 1, 1, 1)), (n - 1) * (n - 2) * (n - 3) // 6),
        (Partition((n - 2, 2)), n * (n - 3) // 2),
    ]
    if n % 2:
        cd_forms = [None, 3 * n * math.factorial(n - 4), None]
    else:
        cd_forms = [3 * (n - 1) * (n - 3) * math.factorial(n - 5) // 2, None, None]
    out = []
    for (lam, closed), cd_form in zip(forms, cd_forms):
        deg = partition_degree(lam)
        if deg != closed:
            raise ArithmeticError(f"hook degree {deg} of {lam} differs from closed form {closed}")
        if is_self_conjugate(lam):
            raise ArithmeticError(f"{lam} is self-conjugate")
        cd, rem = divmod(half_order, deg)
        if rem:
            raise ArithmeticError(f"degree {deg} does not divide |Alt({n})|")
        if cd_form is not None and cd_form != cd:
            raise ArithmeticError(f"codegree {cd} of {lam} differs from closed form {cd_form}")
        out.append(AnWitness(lam, deg, closed, cd, cd_form))
    return tuple(out)


# -- PSL2(q) extensions -----------------------------------------------------------

PLAIN, UNTWISTED, TWISTED, OTHER = "plain", "S<phi^k>", "S<delta*phi^k>", "other"
COSET_TYPES = (PLAIN, UNTWISTED, TWISTED, OTHER)


class ConfigError(ValueError):
    """Inconsistent PSL2 extension parameters."""


@dataclass(frozen=True)
class Psl2Config:
    """A group H with PSL2(q) <= H <= Aut(PSL2(q)).

    ``d`` is |H : PGL2(q)| when ``contains_delta`` and |H : PSL2(q)| otherwise,
    so H/PSL2(q) maps onto a subgroup of order d of the field automorphisms.
    In characteristic 2 the diagonal automorphism is trivial and
    ``contains_delta`` is always True.

    ``coset_type``: ``plain`` when d = 1; ``S<phi^k>`` / ``S<delta*phi^k>`` for
    the untwisted/twisted extensions by a field automorphism of order d
    (k = f/d); ``other`` for delta-containing extensions with d > 1.
    """

    p: int
    f: int
    contains_delta: bool
    d: int
    coset_type: str

    def __post_init__(self):
        if not is_prime(self.p) or self.f < 1:
            raise ConfigError(f"p = {self.p} must be prime and f = {self.f} positive")
        if self.q <= 3:
            raise ConfigError(f"q = {self.q} must exceed 3")
        if self.d < 1 or self.f % self.d:
            raise ConfigError(f"d = {self.d} must divide f = {self.f}")
        if self.p == 2 and not self.contains_delta:
            raise ConfigError("for p = 2 the trivial diagonal automorphism lies in every H")
        if self.coset_type not in COSET_TYPES:
            raise ConfigError(f"unknown coset type {self.coset_type!r}")
        if self.coset_type != _expected_type(self):
            raise ConfigError(f"coset type {self.coset_type!r} does not match d = {self.d}, delta = {self.contains_delta}")

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def a(self) -> int:
        return (self.d & -self.d).bit_length() - 1

    @property
    def m(self) -> int:
        return self.d >> self.a

    @property
    def epsilon(self) -> int | None:
        if self.p == 2:
            return None
        return 1 if self.q % 4 == 1 else -1

    @property
    def field_power(self) -> int:
        """k with H generated over G by (a twist of) x -> x^(p^k); 0 when d = 1."""
        return 0 if self.d == 1 else self.f // self.d

    @property
    def twisted(self) -> bool:
        return self.coset_type == TWISTED

    # the named subgroups of Out(S) that White's exceptions refer to
    @property
    def is_s_phi(self) -> bool:
        """H = S<phi>."""
        return self.d == self.f and (self.p == 2 or (not self.contains_delta and not self.twisted))

    @property
    def is_s_delta_phi(self) -> bool:
        """H = S<delta*phi>."""
        return self.d == self.f and self.twisted

    @property
    def is_full(self) -> bool:
        """H = Aut(S)."""
        return self.d == self.f and self.contains_delta

    @property
    def below_s_phi(self) -> bool:
        """H <= S<phi>."""
        return self.p == 2 or (not self.contains_delta and not self.twisted)

    def label(self) -> str:
        if self.d == 1:
            return f"PGL2({self.q})" if self.contains_delta and self.p != 2 else f"PSL2({self.q})"
        base = "PGL2" if self.contains_delta and self.p != 2 else "PSL2"
        twist = "delta*" if self.twisted else ""
        return f"{base}({self.q}).<{twist}phi^{self.field_power}>"


def _expected_type(cfg: Psl2Config) -> str:
    if cfg.coset_type == TWISTED:
        if cfg.p == 2 or cfg.contains_delta or cfg.d % 2:
            raise ConfigError("a twisted extension needs odd p, delta outside H and even d")
        return TWISTED
    if cfg.d == 1:
        return PLAIN
    return OTHER if cfg.contains_delta and cfg.p != 2 else UNTWISTED


def psl2_enumerate_subgroups(p: int, f: int) -> list[Psl2Config]:
    """One config per subgroup of Out(PSL2(p^f)), delta-free ones first, by increasing d."""
    if not is_prime(p) or f < 1 or p**f <= 3:
        raise ConfigError(f"invalid p = {p}, f = {f}")
    divisors = [d for d in range(1, f + 1) if f % d == 0]
    if p == 2:
        return [Psl2Config(p, f, True, d, PLAIN if d == 1 else UNTWISTED) for d in divisors]
    out = []
    for d in divisors:
        out.append(Psl2Config(p, f, False, d, PLAIN if d == 1 else UNTWISTED))
        if d % 2 == 0:
            out.append(Psl2Config(p, f, False, d, TWISTED))
    out.extend(Psl2Config(p, f, True, d, PLAIN if d == 1 else OTHER) for d in divisors)
    return out


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def psl2_config_group(cfg: Psl2Config) -> PermutationGroup:
    """The group H of ``cfg`` acting on the projective line."""
    return projective_line_group(
        cfg.q,
        delta=cfg.contains_delta and cfg.p != 2,
        field_power=cfg.field_power,
        twisted=cfg.twisted,
        name=cfg.label(),
    )


@dataclass(frozen=True)
class DegreeSetResult:
    degrees: frozenset[int]
    provenance: dict[int, tuple[str, ...]] = field(hash=False)
    # (degree, exception number); the degree is None for the undefined (q+eps)/2 when p = 2
    suppressed: tuple[tuple[int | None, int], ...]


def white_degree_set(cfg: Psl2Config) -> DegreeSetResult:
    q, p, f = cfg.q, cfg.p, cfg.f
    candidates: list[tuple[int | None, str, int | None]] = [(1, "unit", None), (q, "q", None)]
    # (degree, branch, number of the exception that removes it or None)
    if p == 2:
        candidates.append((None, "half", 1))  # eps, hence (q+eps)/2, is undefined
    else:
        candidates.append(((q + cfg.epsilon) // 2, "half", None if cfg.below_s_phi else 1))
    for ell in range(1, cfg.m + 1):
        if cfg.m % ell:
            continue
        exc = 2 if (ell == 1 and p == 3 and f % 2 and cfg.is_s_phi) else None
        candidates.append(((q - 1) * 2**cfg.a * ell, f"qMinusBranch({ell})", exc))
    for j in range(1, cfg.d + 1):
        if cfg.d % j:
            continue
        exc = None
        if j == 1 and p == 3 and f % 2 and cfg.is_full:
            exc = 3
        elif j == 1 and p in (2, 3, 5) and f % 2 and cfg.is_s_phi:
            exc = 4
        elif j == 2 and p in (2, 3) and f % 4 == 2 and (cfg.is_s_phi or cfg.is_s_delta_phi):
            exc = 5
        candidates.append(((q + 1) * j, f"qPlusBranch({j})", exc))

    provenance: dict[int, list[str]] = {}
    suppressed = []
    for deg, branch, exc in candidates:
        if exc is None:
            provenance.setdefault(deg, []).append(branch)
        else:
            suppressed.append((deg, exc))
    return DegreeSetResult(
        frozenset(provenance),
        {k: tuple(v) for k, v in sorted(provenance.items())},
        tuple(suppressed),
    )


@dataclass(frozen=True)
class Psl2Verdict:
    satisfies: bool
    failed_condition: int | None
    exceptional: bool


def psl2_squarefree_conditions(cfg: Psl2Config) -> Psl2Verdict:
    """Conditions (1)-(3) on p, d and q, with the two PSL2(9) extensions of order 2 excepted."""
    p, q, d = cfg.p, cfg.q, cfg.d
    failed = None
    if p != 2 and d % (p * p) == 0:
        failed = 1
    if failed is None:
        for r in prime_divisors(d):
            if r != 2 and r != p and d % (r * r) == 0 and (d * (q * q - 1)) % r**4 == 0:
                failed = 2
                break
    if failed is None:
        odd_d_needed = q % 8 in (1, 7) or (q % 2 == 1 and cfg.contains_delta)
        if d % 4 == 0 or (odd_d_needed and d % 2 == 0):
            failed = 3
    exceptional = q == 9 and d == 2 and not cfg.contains_delta and cfg.coset_type in (UNTWISTED, TWISTED)
    if exceptional and failed != 3:
        raise AssertionError("PSL2(9) extensions of order 2 must fail condition 3")
    return Psl2Verdict(failed is None or exceptional, failed, exceptional)
