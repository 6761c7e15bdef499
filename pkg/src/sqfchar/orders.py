"""Exact orders of finite simple groups and cyclotomic values at integers."""

from __future__ import annotations

import math
from functools import reduce

from .cyclotomic import mobius
from .fields import prime_power

__all__ = [
    "LIE_FAMILIES",
    "cyclotomic_poly_eval",
    "lie_group_order",
    "simple_group_order",
    "fourth_power_free",
    "OrderError",
]


class OrderError(ValueError):
    """Unsupported family or parameters outside the family's range."""


def cyclotomic_poly_eval(k: int, q: int) -> int:
    """Phi_k(q) as the exact quotient prod_{d | k} (q^d - 1)^mu(k/d)."""
    if k < 1 or q < 2:
        raise ValueError("need k >= 1 and q >= 2")
    num, den = 1, 1
    for d in range(1, k + 1):
        if k % d:
            continue
        mu = mobius(k // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def _prod(xs):
    return reduce(lambda a, b: a * b, xs, 1)


def _odd_power_of(q, p):
    pf = prime_power(q)
    return pf is not None and pf[0] == p and pf[1] % 2 == 1


def _a(n, q):
    return q ** (n * (n + 1) // 2) * _prod(q**i - 1 for i in range(2, n + 2)) // math.gcd(n + 1, q - 1)


def _bc(n, q):
    return q ** (n * n) * _prod(q ** (2 * i) - 1 for i in range(1, n + 1)) // math.gcd(2, q - 1)


def _d(n, q):
    return q ** (n * (n - 1)) * (q**n - 1) * _prod(q ** (2 * i) - 1 for i in range(1, n)) // math.gcd(4, q**n - 1)


def _2a(n, q):
    return q ** (n * (n + 1) // 2) * _prod(q**i - (-1) ** i for i in range(2, n + 2)) // math.gcd(n + 1, q + 1)


def _2d(n, q):
    return q ** (n * (n - 1)) * (q**n + 1) * _prod(q ** (2 * i) - 1 for i in range(1, n)) // math.gcd(4, q**n + 1)


def _exc(power, degrees, q, divisor=1):
    return q**power * _prod(q**i - 1 for i in degrees) // divisor


# family tag -> (order function of (n, q), minimum rank or None for fixed rank, q-check, description)
# Ranges are chosen so that every accepted (n, q) names a simple group.
LIE_FAMILIES = {
    "A": (_a, 1, lambda n, q: not (n == 1 and q < 4), "A_n(q) = PSL_{n+1}(q)"),
    "B": (_bc, 2, lambda n, q: not (n == 2 and q == 2), "B_n(q)"),
    "C": (_bc, 2, lambda n, q: not (n == 2 and q == 2), "C_n(q)"),
    "D": (_d, 4, lambda n, q: True, "D_n(q)"),
    "2A": (_2a, 2, lambda n, q: not (n == 2 and q == 2), "2A_n(q) = PSU_{n+1}(q)"),
    "2D": (_2d, 4, lambda n, q: True, "2D_n(q)"),
    "G2": (lambda n, q: _exc(6, (6, 2), q), None, lambda n, q: q > 2, "G_2(q)"),
    "F4": (lambda n, q: _exc(24, (12, 8, 6, 2), q), None, lambda n, q: True, "F_4(q)"),
    "E6": (lambda n, q: _exc(36, (12, 9, 8, 6, 5, 2), q, math.gcd(3, q - 1)), None, lambda n, q: True, "E_6(q)"),
    "E7": (
        lambda n, q: _exc(63, (2, 6, 8, 10, 12, 14, 18), q, math.gcd(2, q - 1)),
        None,
        lambda n, q: True,
        "E_7(q)",
    ),
    "E8": (lambda n, q: _exc(120, (2, 8, 12, 14, 18, 20, 24, 30), q), None, lambda n, q: True, "E_8(q)"),
    "2E6": (
        lambda n, q: q**36
        * (q**12 - 1)
        * (q**9 + 1)
        * (q**8 - 1)
        * (q**6 - 1)
        * (q**5 + 1)
        * (q**2 - 1)
        // math.gcd(3, q + 1),
        None,
        lambda n, q: True,
        "2E_6(q)",
    ),
    "3D4": (
        lambda n, q: q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1),
        None,
        lambda n, q: True,
        "3D_4(q)",
    ),
    "2B2": (lambda n, q: q**2 * (q**2 + 1) * (q - 1), None, lambda n, q: _odd_power_of(q, 2) and q > 2, "2B_2(q)"),
    "2F4": (
        lambda n, q: q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1),
        None,
        lambda n, q: _odd_power_of(q, 2) and q > 2,
        "2F_4(q)",
    ),
    "2G2": (lambda n, q: q**3 * (q**3 + 1) * (q - 1), None, lambda n, q: _odd_power_of(q, 3) and q > 3, "2G_2(q)"),
    # Tits group: index 2 in 2F_4(2)
    "2F4(2)'": (lambda n, q: 17971200, None, lambda n, q: True, "2F_4(2)'"),
}


def lie_group_order(family: str, n: int | None = None, q: int | None = None) -> int:
    """Order of the simple group of Lie type ``family`` with rank ``n`` over GF(q)."""
    try:
        fn, min_rank, q_ok, _ = LIE_FAMILIES[family]
    except KeyError:
        raise OrderError(f"unsupported Lie family {family!r}") from None
    if family == "2F4(2)'":
        return fn(n, q)
    if q is None or prime_power(q) is None:
        raise OrderError(f"{family}: q = {q} is not a prime power")
    if min_rank is not None:
        if n is None or n < min_rank:
            raise OrderError(f"{family}: rank n = {n} below {min_rank}")
    if not q_ok(n, q):
        raise OrderError(f"{family}: parameters n={n}, q={q} do not give a simple group of this family")
    return fn(n, q)


_SPORADIC_J1 = 175560


def simple_group_order(ident: str) -> int:
    """Order of a simple group named as ``Alt(n)``, ``PSL2(q)``, ``Sz(q)``, ``J1``, ``2F4(2)'``,
    or ``<family>(n,q)``/``<family>(q)``."""
    s = ident.replace(" ", "")
    if s == "J1":
        return _SPORADIC_J1
    if s in LIE_FAMILIES:  # parameter-free entries such as the Tits group
        return lie_group_order(s)
    head, _, rest = s.partition("(")
    if not rest.endswith(")"):
        raise OrderError(f"cannot parse simple group {ident!r}")
    try:
        args = [int(x) for x in rest[:-1].split(",")]
    except ValueError:
        raise OrderError(f"cannot parse simple group {ident!r}") from None
    if head == "Alt" and len(args) == 1:
        if args[0] < 5:
            raise OrderError("Alt(n) is nonabelian simple only for n >= 5")
        return math.factorial(args[0]) // 2
    if head == "PSL2" and len(args) == 1:
        return lie_group_order("A", 1, args[0])
    if head == "Sz" and len(args) == 1:
        return lie_group_order("2B2", None, args[0])
    if head in LIE_FAMILIES:
        if LIE_FAMILIES[head][1] is None:
            if len(args) != 1:
                raise OrderError(f"{head} takes a single parameter q")
            return lie_group_order(head, None, args[0])
        if len(args) != 2:
            raise OrderError(f"{head} takes parameters (n, q)")
        return lie_group_order(head, args[0], args[1])
    raise OrderError(f"unknown simple group {ident!r}")


def fourth_power_free(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    p = 2
    while p**4 <= n:
        if n % p**4 == 0:
            return False
        while n % p == 0:
            n //= p
        p += 1
    return True
