"""Exact values in Z[zeta_e] held as root-of-unity multiplicity vectors.

A value ``sum_j m_j zeta_e^j`` is stored as the length-e vector ``m``. Two vectors
represent the same number iff their reductions modulo the e-th cyclotomic
polynomial agree; :func:`canonical` computes that reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "cyclotomic_poly",
    "mobius",
    "reduction_matrix",
    "canonical",
    "conj",
    "CyclotomicValue",
    "format_value",
]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first.

    Built as prod_{d | n} (x^d - 1)^mu(n/d); multiplying or dividing by
    x^d - 1 is a shifted subtraction or a running sum, so this stays linear
    in the degree per divisor.
    """
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    mus = {d: mobius(n // d) for d in divisors}
    num = np.zeros(sum(d for d in divisors if mus[d] == 1) + 1, dtype=object)
    num[0] = 1
    for d in divisors:
        if mus[d] == 1:
            num[d:] = num[d:] - num[: len(num) - d].copy()
            num = -num
    for d in divisors:
        if mus[d] == -1:
            # a = q (x^d - 1) gives q[i] = q[i - d] - a[i], solved from the bottom up
            for i in range(len(num)):
                num[i] = (num[i - d] if i >= d else 0) - num[i]
    coeffs = [int(c) for c in num]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) - 1 != _totient(n) or coeffs[-1] != 1:
        raise ArithmeticError(f"cyclotomic polynomial construction failed for n={n}")
    return tuple(coeffs)


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _totient(n: int) -> int:
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    return out - out // m if m > 1 else out


@lru_cache(maxsize=None)
def reduction_matrix(e: int) -> np.ndarray:
    """Row j holds the coefficients of x^j mod Phi_e."""
    phi = np.array(cyclotomic_poly(e), dtype=np.int64)
    deg = len(phi) - 1
    mat = np.zeros((e, deg), dtype=np.int64)
    cur = np.zeros(deg, dtype=np.int64)
    cur[0] = 1
    for j in range(e):
        mat[j] = cur
        top = cur[-1]
        cur = np.roll(cur, 1)
        cur[0] = 0
        if top:
            cur -= top * phi[:-1]
        if np.abs(cur).max() > 2**40:
            raise OverflowError(f"reduction coefficients for e={e} too large for int64")
    mat.setflags(write=False)
    return mat


def canonical(m: np.ndarray) -> np.ndarray:
    """Reduce multiplicity vectors (last axis has length e) modulo Phi_e.

    Only the exponents that occur anywhere in ``m`` take part in the product,
    which keeps large exponents cheap for the sparse vectors character tables produce.
    """
    m = np.asarray(m, dtype=np.int64)
    e = m.shape[-1]
    red = reduction_matrix(e)
    flat = m.reshape(-1, e)
    used = np.nonzero(flat.any(axis=0))[0]
    part = flat[:, used]
    sub = red[used]
    if part.size and int(np.abs(part).sum(axis=1).max()) * int(np.abs(sub).max(initial=0)) >= 2**62:
        out = (part.astype(object) @ sub.astype(object)).astype(np.int64)
    else:
        out = part @ sub
    return out.reshape(m.shape[:-1] + (red.shape[1],))


def conj(m: np.ndarray) -> np.ndarray:
    """Complex conjugate: zeta^j -> zeta^(-j)."""
    m = np.asarray(m)
    return np.roll(m[..., ::-1], 1, axis=-1)


@dataclass(frozen=True, eq=False)
class CyclotomicValue:
    e: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicities) != self.e:
            raise ValueError("multiplicity vector length must equal e")

    @classmethod
    def rational(cls, value: int, e: int) -> "CyclotomicValue":
        return cls(e, (value,) + (0,) * (e - 1))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.multiplicities, dtype=np.int64)

    @property
    def total(self) -> int:
        return sum(self.multiplicities)

    def canonical(self) -> tuple[int, ...]:
        return tuple(int(x) for x in canonical(self.array))

    def conjugate(self) -> "CyclotomicValue":
        return CyclotomicValue(self.e, tuple(int(x) for x in conj(self.array)))

    def embed(self, e: int) -> "CyclotomicValue":
        """Same number viewed in Z[zeta_e] for a multiple e of self.e."""
        if e % self.e:
            raise ValueError(f"{self.e} does not divide {e}")
        out = np.zeros(e, dtype=np.int64)
        out[:: e // self.e] = self.multiplicities
        return CyclotomicValue(e, tuple(int(x) for x in out))

    def __add__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        if other.e != self.e:
            raise ValueError("cyclotomic orders differ")
        return CyclotomicValue(self.e, tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities)))

    def __mul__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        if other.e != self.e:
            raise ValueError("cyclotomic orders differ")
        e = self.e
        out = np.zeros(e, dtype=np.int64)
        a, b = self.array, other.array
        for i in np.nonzero(a)[0]:
            out += a[i] * np.roll(b, int(i))
        return CyclotomicValue(e, tuple(int(x) for x in out))

    def __eq__(self, other):
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        if other.e != self.e:
            e = math.lcm(self.e, other.e)
            return self.embed(e) == other.embed(e)
        return self.canonical() == other.canonical()

    __hash__ = None

    def as_integer(self) -> int | None:
        c = self.canonical()
        return c[0] if not any(c[1:]) else None

    def __str__(self):
        return format_value(self.array)


def format_value(m: np.ndarray) -> str:
    """Readable form: an integer when rational, else a sum of E(o)^u terms."""
    m = np.asarray(m, dtype=np.int64)
    e = len(m)
    c = canonical(m)
    if not c[1:].any():
        return str(int(c[0]))
    support = np.nonzero(m)[0]
    step = int(np.gcd.reduce(np.append(support, e)))
    o = e // step
    sub = m[::step].copy()
    sub -= sub.min()
    terms = []
    for u, k in enumerate(sub):
        if not k:
            continue
        base = "1" if u == 0 else (f"E({o})" if u == 1 else f"E({o})^{u}")
        terms.append(base if k == 1 else f"{k}*{base}")
    return "+".join(terms)
