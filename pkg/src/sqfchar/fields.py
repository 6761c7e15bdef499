"""Small finite fields F_q, q = p^f, as lookup tables over integer codes 0..q-1.

The element with code ``c`` is the polynomial whose base-p digits of ``c`` are
its coefficients (constant term first), reduced modulo a fixed irreducible.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

__all__ = ["FiniteField", "prime_power", "is_prime"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, f)`` with ``q == p**f``, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    f = 0
    while q % p == 0:
        q //= p
        f += 1
    return (p, f) if q == 1 else None


def _polymod(a, m, p):
    a = list(a)
    while len(a) >= len(m):
        c = a[-1]
        if c:
            shift = len(a) - len(m)
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    return a


def _irreducible(p, f):
    """Lexicographically first monic irreducible of degree f over F_p."""
    if f == 1:
        return [0, 1]
    for tail in product(range(p), repeat=f):
        cand = list(tail) + [1]
        if cand[0] == 0:
            continue
        ok = True
        for deg in range(1, f // 2 + 1):
            for low in product(range(p), repeat=deg):
                if not any(_polymod(cand, list(low) + [1], p)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return cand
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    def __init__(self, q: int):
        pf = prime_power(q)
        if pf is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.f = pf
        p, f = self.p, self.f
        self.modulus = _irreducible(p, f)
        digits = np.array([[(c // p**i) % p for i in range(f)] for c in range(q)], dtype=np.int64)
        weights = p ** np.arange(f, dtype=np.int64)
        self.add = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                prod_ = [0] * (2 * f - 1)
                for i in range(f):
                    if digits[a, i]:
                        for j in range(f):
                            prod_[i + j] += int(digits[a, i] * digits[b, j])
                red = _polymod([c % p for c in prod_], self.modulus, p) if f > 1 else [prod_[0] % p]
                red += [0] * (f - len(red))
                mul[a, b] = mul[b, a] = sum(int(c) * p**i for i, c in enumerate(red))
        self.mul = mul
        self.neg = np.array([int(np.nonzero(self.add[a] == 0)[0][0]) for a in range(q)], dtype=np.int64)
        self.inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.primitive = self._primitive_element()

    def _primitive_element(self):
        for g in range(2 if self.q > 2 else 1, self.q):
            x, k = g, 1
            while x != 1:
                x = int(self.mul[x, g])
                k += 1
            if k == self.q - 1:
                return g
        raise AssertionError("no primitive element")

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k else 1
        r = 1
        for _ in range(k % (self.q - 1)):
            r = int(self.mul[r, a])
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)
