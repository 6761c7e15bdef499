"""Permutation groups built on a stabilizer chain, with element tables and conjugacy classes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .perm import Permutation

__all__ = [
    "DEFAULT_ORDER_BOUND",
    "OrderBoundExceeded",
    "NotInGroupError",
    "StabilizerChain",
    "PermutationGroup",
    "ConjugacyClasses",
    "conjugacy_classes",
    "exponent",
    "normal_closure",
    "prime_divisors",
]

DEFAULT_ORDER_BOUND = 10**6


class OrderBoundExceeded(ValueError):
    """The group is larger than the configured bound for element-level work."""


class NotInGroupError(ValueError):
    pass


def prime_divisors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(b[i] for i in a)


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


@dataclass
class _Level:
    point: int
    gens: list
    transversal: dict = field(default_factory=dict)

    def rebuild(self, identity):
        self.transversal = {self.point: identity}
        queue = [self.point]
        for beta in queue:
            u = self.transversal[beta]
            for s in self.gens:
                img = s[beta]
                if img not in self.transversal:
                    self.transversal[img] = _mul(u, s)
                    queue.append(img)


class StabilizerChain:
    """Deterministic Schreier-Sims base and strong generating set.

    ``transversal[i][pt]`` maps the i-th base point to ``pt`` and fixes the
    earlier base points.
    """

    def __init__(self, degree: int, generators: Iterable[tuple]):
        self.degree = degree
        self._id = tuple(range(degree))
        gens = [g for g in generators if g != self._id]
        self.levels: list[_Level] = []
        self._pending_level = 0
        self._build(gens)

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    @property
    def orbit_lengths(self) -> list[int]:
        return [len(lv.transversal) for lv in self.levels]

    @property
    def order(self) -> int:
        return math.prod(self.orbit_lengths)

    def _strip(self, g, start):
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            beta = g[lv.point]
            u = lv.transversal.get(beta)
            if u is None:
                return g, i
            g = _mul(g, _inv(u))
        return g, len(self.levels)

    def contains(self, g: tuple) -> bool:
        h, j = self._strip(tuple(g), 0)
        return j == len(self.levels) and h == self._id

    def _new_point(self, g):
        used = set(self.base)
        for i, j in enumerate(g):
            if i != j and i not in used:
                return i
        raise AssertionError("element fixes all points but is not the identity")

    def _build(self, gens):
        for g in gens:
            if all(g[b] == b for b in self.base):
                self.levels.append(_Level(self._new_point(g), []))
        for i, lv in enumerate(self.levels):
            lv.gens = [g for g in gens if all(g[b] == b for b in self.base[:i])]
            lv.rebuild(self._id)
        i = len(self.levels) - 1
        while i >= 0:
            if self._level_complete(i):
                i -= 1
            else:
                i = self._pending_level

    def _level_complete(self, i):
        lv = self.levels[i]
        for beta, u in list(lv.transversal.items()):
            for s in lv.gens:
                us = _mul(u, s)
                v = lv.transversal[us[lv.point]]
                sch = _mul(us, _inv(v))
                if sch == self._id:
                    continue
                h, j = self._strip(sch, i + 1)
                if j < len(self.levels) or h != self._id:
                    if j == len(self.levels):
                        self.levels.append(_Level(self._new_point(h), []))
                    for lvl in range(i + 1, j + 1):
                        self.levels[lvl].gens.append(h)
                        self.levels[lvl].rebuild(self._id)
                    self._pending_level = j
                    return False
        return True

    def transversal_arrays(self) -> list[np.ndarray]:
        return [np.array(list(lv.transversal.values()), dtype=np.int64).reshape(-1, self.degree) for lv in self.levels]

    def strong_generators(self) -> list[tuple]:
        seen = []
        for lv in self.levels:
            for s in lv.gens:
                if s not in seen:
                    seen.append(s)
        return seen


class PermutationGroup:
    """A permutation group given by generators; order and element data are cached."""

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        name: str | None = None,
        order_bound: int = DEFAULT_ORDER_BOUND,
    ):
        gens = tuple(generators) or (Permutation.identity(degree),)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators = gens
        self.name = name
        self.order_bound = order_bound

    def __repr__(self):
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermutationGroup({label}, degree={self.degree})"

    @cached_property
    def chain(self) -> StabilizerChain:
        return StabilizerChain(self.degree, (g.images for g in self.generators))

    @property
    def order(self) -> int:
        return self.chain.order

    def __contains__(self, g: Permutation) -> bool:
        return g.degree == self.degree and self.chain.contains(g.images)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order == 1

    def check_bound(self, bound: int | None = None):
        bound = self.order_bound if bound is None else bound
        if self.order > bound:
            raise OrderBoundExceeded(f"group order {self.order} exceeds bound {bound}")

    # -- element table -------------------------------------------------

    @cached_property
    def _base(self) -> np.ndarray:
        base = self.chain.base
        return np.array(base if base else [0], dtype=np.int64)

    @cached_property
    def _radix(self) -> int:
        radix = max(self.degree, 2)
        if len(self._base) * math.log2(radix) >= 62:
            raise OrderBoundExceeded("base image codes do not fit in 64 bits")
        return radix

    @cached_property
    def elements(self) -> np.ndarray:
        """All elements as an ``(order, degree)`` image array; row 0 is the identity."""
        self.check_bound()
        dtype = np.int16 if self.degree < 2**15 else np.int32
        elems = np.arange(self.degree, dtype=np.int64)[None, :]
        for trans in reversed(self.chain.transversal_arrays()):
            # e * u applies e first: (e u)[x] = u[e[x]]
            elems = np.concatenate([u[elems] for u in trans], axis=0)
        return np.ascontiguousarray(elems.astype(dtype))

    @cached_property
    def _lookup_table(self):
        codes = kernels.base_codes(self.elements[:, self._base], self._radix)
        order = np.argsort(codes, kind="stable")
        return codes[order], order.astype(np.int64)

    def index_of(self, perms) -> np.ndarray:
        """Row indices in ``elements`` for an array of image rows (-1 if absent)."""
        perms = np.atleast_2d(np.asarray(perms))
        codes, index = self._lookup_table
        idx = kernels.lookup(np.ascontiguousarray(perms[:, self._base]), self._radix, codes, index)
        # base images pin down a group element, but a non-member can share them
        hit = idx >= 0
        if hit.any():
            same = (self.elements[idx[hit]] == perms[hit]).all(axis=1)
            idx[np.flatnonzero(hit)[~same]] = -1
        return idx

    def element(self, i: int) -> Permutation:
        return Permutation(tuple(int(x) for x in self.elements[i]))


@dataclass(frozen=True)
class ConjugacyClasses:
    """Class data; class 0 is the identity class.

    ``power_map[l][c]`` is the class of ``g**l`` for ``g`` in class ``c`` and
    each prime ``l`` dividing the exponent.
    """

    representatives: tuple[Permutation, ...]
    sizes: tuple[int, ...]
    orders: tuple[int, ...]
    power_map: dict[int, tuple[int, ...]]
    inverse_map: tuple[int, ...]
    labels: np.ndarray = field(repr=False, compare=False)
    rep_indices: tuple[int, ...] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.sizes)

    def class_of(self, group: PermutationGroup, g: Permutation) -> int:
        idx = int(group.index_of(np.array(g.images))[0])
        if idx < 0:
            raise NotInGroupError(f"{g!r} is not in the group")
        return int(self.labels[idx])

    def power_classes(self, group: PermutationGroup, c: int) -> list[int]:
        """Classes of ``g**0, ..., g**(o-1)`` for the representative ``g`` of class ``c``."""
        g = self.representatives[c]
        o = self.orders[c]
        rows = []
        cur = Permutation.identity(g.degree)
        for _ in range(o):
            rows.append(cur.images)
            cur = cur * g
        return [int(x) for x in self.labels[group.index_of(np.array(rows))]]


def conjugacy_classes(group: PermutationGroup, bound: int | None = None) -> ConjugacyClasses:
    """Conjugacy classes by conjugation-orbit closure over a deterministic element sweep."""
    cached = group.__dict__.get("_classes")
    if cached is not None:
        return cached
    if bound is not None:
        group.order_bound = bound
    group.check_bound()
    elems = group.elements
    codes, index = group._lookup_table
    gens = np.array([g.images for g in group.generators], dtype=np.int64)
    gens_inv = np.array([g.inverse().images for g in group.generators], dtype=np.int64)
    raw, ncls = kernels.conjugacy_labels(elems, gens, gens_inv, group._base, group._radix, codes, index)
    raw = np.asarray(raw, dtype=np.int64)
    sizes = np.bincount(raw, minlength=ncls)
    first = np.full(ncls, len(raw), dtype=np.int64)
    np.minimum.at(first, raw, np.arange(len(raw)))
    reps = [group.element(int(i)) for i in first]
    orders = [r.order() for r in reps]
    perm = sorted(range(ncls), key=lambda c: (orders[c], int(sizes[c]), int(first[c])))
    relabel = np.empty(ncls, dtype=np.int64)
    relabel[perm] = np.arange(ncls)
    labels = relabel[raw]
    reps = [reps[c] for c in perm]
    orders = [orders[c] for c in perm]
    sizes = [int(sizes[c]) for c in perm]
    rep_idx = [int(first[c]) for c in perm]

    def classes_of(perms):
        return tuple(int(labels[i]) for i in group.index_of(np.array([p.images for p in perms])))

    exp = reduce(math.lcm, orders, 1)
    power_map = {ell: classes_of([r**ell for r in reps]) for ell in prime_divisors(exp)}
    inverse_map = classes_of([r.inverse() for r in reps])
    cc = ConjugacyClasses(tuple(reps), tuple(sizes), tuple(orders), power_map, inverse_map, labels, tuple(rep_idx))
    group.__dict__["_classes"] = cc
    return cc


def exponent(group: PermutationGroup, classes: ConjugacyClasses | None = None) -> int:
    classes = classes or conjugacy_classes(group)
    return reduce(math.lcm, classes.orders, 1)


def normal_closure(group: PermutationGroup, elems: Iterable[Permutation]) -> PermutationGroup:
    """Smallest normal subgroup of ``group`` containing ``elems``."""
    elems = list(elems)
    for x in elems:
        if x not in group:
            raise NotInGroupError(f"{x!r} is not in the group")
    gens = [x for x in elems if not x.is_identity()]
    chain = StabilizerChain(group.degree, (g.images for g in gens))
    i = 0
    while i < len(gens):
        n = gens[i]
        for g in group.generators:
            conj = g.inverse() * n * g
            if not chain.contains(conj.images):
                gens.append(conj)
                chain = StabilizerChain(group.degree, (h.images for h in gens))
        i += 1
    sub = PermutationGroup(group.degree, gens, name=None)
    sub.__dict__["chain"] = chain
    return sub
