"""Linear algebra and polynomial root finding over a prime field F_p."""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .fields import is_prime
from .group import prime_divisors

__all__ = [
    "dixon_prime",
    "primitive_root",
    "nullspace",
    "column_echelon",
    "charpoly",
    "roots",
]


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2 * ceil(sqrt(order)) * exponent."""
    bound = 2 * math.isqrt(order - 1) + 2 if order > 1 else 2
    p = bound * exponent + 1
    while not is_prime(p):
        p += exponent
    return p


def primitive_root(p: int) -> int:
    factors = prime_divisors(p - 1)
    g = 2 if p > 2 else 1
    while any(pow(g, (p - 1) // f, p) == 1 for f in factors):
        g += 1
    return g


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : a x = 0} as columns, in reduced form (free variables set to unit vectors)."""
    a = np.asarray(a, dtype=np.int64)
    rows, cols = a.shape
    r, piv = kernels.rref_mod(a, p)
    piv = [int(c) for c in piv]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(piv):
            basis[pc, k] = (-r[i, fc]) % p
    return basis


def column_echelon(b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Rebase the column space of ``b`` so that ``b[pivots, :]`` is the identity."""
    r, piv = kernels.rref_mod(np.asarray(b, dtype=np.int64).T, p)
    return np.ascontiguousarray(r[: len(piv)].T), np.asarray(piv, dtype=np.int64)


def charpoly(a: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial det(xI - a), coefficients low degree first.

    Hessenberg reduction followed by the standard recurrence.
    """
    h = [[int(x) % p for x in row] for row in np.asarray(a)]
    n = len(h)
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            h[piv], h[m] = h[m], h[piv]
            for row in h:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(h[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = h[i][m - 1] * inv % p
            if not u:
                continue
            for j in range(n):
                h[i][j] = (h[i][j] - u * h[m][j]) % p
            for row in h:
                row[m] = (row[m] + u * row[i]) % p
    polys = [[1]]
    for k in range(n):
        cur = _padd(_pmul([(-h[k][k]) % p, 1], polys[k], p), [], p)
        prod_ = 1
        for i in range(k - 1, -1, -1):
            prod_ = prod_ * h[i + 1][i] % p
            coef = prod_ * h[i][k] % p
            cur = _psub(cur, [coef * c % p for c in polys[i]], p)
        polys.append(cur)
    return polys[n]


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _psub(a, b, p):
    return _padd(a, [(-c) % p for c in b], p)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _pdivmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return _trim(q), a


def _pmonic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p) if a else a


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _split(f, p, shift=0):
    """Roots of a squarefree f that splits into distinct linear factors (deterministic Cantor-Zassenhaus)."""
    deg = len(f) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [(-f[0]) * pow(f[1], -1, p) % p]
    if p == 2:
        return [x for x in (0, 1) if sum(f[i] * x**i for i in range(len(f))) % 2 == 0]
    a = shift
    while True:
        t = _ppowmod([a % p, 1], (p - 1) // 2, f, p)
        g = _pgcd(f, _psub(t, [1], p), p)
        if 0 < len(g) - 1 < deg:
            h = _pdivmod(f, g, p)[0]
            return _split(g, p, a + 1) + _split(h, p, a + 1)
        a += 1


def roots(f: list[int], p: int) -> list[int]:
    """Distinct roots in F_p of the polynomial f (low degree first), sorted."""
    f = _pmonic(_trim([c % p for c in f]), p)
    xp = _ppowmod([0, 1], p, f, p)
    g = _pgcd(f, _psub(xp, [0, 1], p), p)
    return sorted(_split(g, p))
