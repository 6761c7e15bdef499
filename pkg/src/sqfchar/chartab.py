"""Exact complex character tables via class-matrix eigenvectors (Dixon-Schneider).

Common eigenvectors of the class multiplication matrices are split over a prime
field F_p with p = 1 (mod e); central characters are turned into degrees and
values mod p, and each value is lifted to the eigenvalue multiplicities of a
representing matrix. No floating point is used anywhere.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .cyclotomic import CyclotomicValue, canonical, conj, format_value
from .group import ConjugacyClasses, PermutationGroup, conjugacy_classes, exponent, normal_closure
from .modular import charpoly, column_echelon, dixon_prime, nullspace, primitive_root, roots

__all__ = [
    "CharacterTable",
    "EigenspaceSplitError",
    "TableDefectError",
    "NotNormalError",
    "character_table",
    "class_matrix",
    "verify_table",
    "restriction_matrix",
    "restrict_to_normal",
    "table_to_dict",
    "dumps_table",
    "format_table",
    "CHARTAB_FORMAT",
]

log = logging.getLogger(__name__)

CHARTAB_FORMAT = 1


class TableDefectError(RuntimeError):
    """An internal consistency check failed; indicates a bug, never bad input."""


class EigenspaceSplitError(TableDefectError):
    """Class matrices failed to split a common eigenspace into one-dimensional pieces."""


class NotNormalError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Irreducible characters of ``group``.

    ``values[i, c]`` is the multiplicity vector (length ``e``) of character ``i``
    on class ``c``: entry ``j`` counts eigenvalues ``zeta_e^j`` of a representing
    matrix of the class representative.
    """

    group: PermutationGroup
    classes: ConjugacyClasses
    e: int
    degrees: tuple[int, ...]
    values: np.ndarray = field(repr=False)
    prime: int = 0

    @property
    def order(self) -> int:
        return self.group.order

    def __len__(self) -> int:
        return len(self.degrees)

    def value(self, row: int, cls: int) -> CyclotomicValue:
        return CyclotomicValue(self.e, tuple(int(x) for x in self.values[row, cls]))

    @cached_property
    def canonical_values(self) -> np.ndarray:
        """``(rows, classes, phi(e))`` canonical coefficients."""
        return canonical(self.values)

    def degree_multiset(self) -> list[int]:
        return sorted(self.degrees)

    def degree_set(self) -> set[int]:
        return set(self.degrees)


# -- class matrices -------------------------------------------------------------


def class_matrix(group: PermutationGroup, classes: ConjugacyClasses, r: int) -> np.ndarray:
    """Matrix ``M`` with ``M[s, t]`` = #{(x, y) in C_r x C_s : x y = z_t}."""
    k = len(classes)
    rinv = classes.inverse_map[r]
    members = np.nonzero(classes.labels == rinv)[0].astype(np.int64)
    reps = np.array([g.images for g in classes.representatives], dtype=np.int64)
    codes, index = group._lookup_table
    return kernels.structure_counts(
        group.elements, members, reps, group._base, group._radix, codes, index, classes.labels, k
    )


# -- Dixon-Schneider --------------------------------------------------------------


def _split_spaces(spaces, m, p):
    out = []
    for basis, piv in spaces:
        dim = basis.shape[1]
        if dim == 1:
            out.append((basis, piv))
            continue
        restricted = ((m @ basis) % p)[piv, :]
        lams = roots(charpoly(restricted, p), p)
        found = 0
        for lam in lams:
            shifted = (restricted - lam * np.eye(dim, dtype=np.int64)) % p
            ns = nullspace(shifted, p)
            sub = (basis @ ns) % p
            out.append(column_echelon(sub, p))
            found += ns.shape[1]
        if found != dim:
            raise EigenspaceSplitError(f"eigenspaces of dimension {found} inside a space of dimension {dim}")
    return out


def character_table(group: PermutationGroup, bound: int | None = None) -> CharacterTable:
    """Compute the exact character table of ``group``.

    Rows come out trivial character first, then by degree and canonical values.
    """
    cached = group.__dict__.get("_chartab")
    if cached is not None:
        return cached
    classes = conjugacy_classes(group, bound)
    k = len(classes)
    order = group.order
    e = exponent(group, classes)
    p = dixon_prime(order, e)
    sizes = classes.sizes
    log.debug("character table: |G|=%d, %d classes, e=%d, p=%d", order, k, e, p)

    spaces = [(np.eye(k, dtype=np.int64), np.arange(k, dtype=np.int64))]
    sweep = sorted(range(1, k), key=lambda c: (sizes[c], c))
    for r in sweep:
        if len(spaces) == k:
            break
        spaces = _split_spaces(spaces, class_matrix(group, classes, r) % p, p)
    if len(spaces) != k:
        raise EigenspaceSplitError(f"only {len(spaces)} of {k} common eigenspaces separated")

    inv = classes.inverse_map
    zeta = pow(primitive_root(p), (p - 1) // e, p)
    power_classes = [classes.power_classes(group, c) for c in range(k)]
    degrees = []
    rows = []
    for basis, _ in spaces:
        v = [int(x) for x in basis[:, 0]]
        if v[0] == 0:
            raise TableDefectError("central character vanishes on the identity class")
        scale = pow(v[0], -1, p)
        w = [x * scale % p for x in v]
        norm = sum(w[s] * w[inv[s]] * pow(sizes[s], -1, p) for s in range(k)) % p
        d2 = order * pow(norm, -1, p) % p
        deg = next((d for d in range(1, math.isqrt(order) + 1) if d * d % p == d2), None)
        if deg is None or order % deg:
            raise TableDefectError("no admissible degree for a central character")
        chi = [w[s] * deg * pow(sizes[s], -1, p) % p for s in range(k)]
        rows.append(_lift_row(chi, deg, classes.orders, power_classes, e, zeta, p))
        degrees.append(deg)

    values = np.array(rows, dtype=np.int64)
    if sum(d * d for d in degrees) != order:
        raise TableDefectError("sum of squared degrees differs from the group order")
    canon = canonical(values).reshape(k, -1)
    trivial = next(i for i in range(k) if degrees[i] == 1 and (values[i, :, 0] == 1).all())
    rest = sorted((i for i in range(k) if i != trivial), key=lambda i: (degrees[i], tuple(canon[i].tolist())))
    perm = [trivial] + rest
    table = CharacterTable(group, classes, e, tuple(degrees[i] for i in perm), values[perm], p)
    group.__dict__["_chartab"] = table
    return table


def _lift_row(chi, deg, orders, power_classes, e, zeta, p):
    """Eigenvalue multiplicities from the values of a character mod p on all powers."""
    k = len(chi)
    out = np.zeros((k, e), dtype=np.int64)
    for c in range(k):
        o = orders[c]
        step = e // o
        zo_inv = pow(zeta, (e - step) % e, p)  # zeta_o^-1
        vals = [chi[pc] for pc in power_classes[c]]
        inv_o = pow(o, -1, p)
        for u in range(o):
            root = pow(zo_inv, u, p)
            acc = 0
            rl = 1
            for x in vals:
                acc += x * rl
                rl = rl * root % p
            m = acc % p * inv_o % p
            if m > deg:
                raise TableDefectError(f"eigenvalue multiplicity {m} exceeds degree {deg}")
            out[c, u * step] = m
        if out[c].sum() != deg:
            raise TableDefectError("eigenvalue multiplicities do not sum to the degree")
    return out


# -- verification ----------------------------------------------------------------


def _products(a, b, weights, e):
    """acc[i, j] = sum_c weights[c] * a[i, c] * b[j, c] in Z[x]/(x^e - 1)."""
    acc = np.zeros((a.shape[0], b.shape[0], e), dtype=np.int64)
    for c in range(a.shape[1]):
        ac, bc = a[:, c, :], b[:, c, :]
        sa = np.nonzero(ac.any(axis=0))[0]
        sb = np.nonzero(bc.any(axis=0))[0]
        for i in sa:
            for j in sb:
                acc[:, :, (i + j) % e] += weights[c] * np.outer(ac[:, i], bc[:, j])
    return acc


def verify_table(t: CharacterTable) -> tuple[bool, list[str]]:
    """Check every table invariant exactly; diagnostics are listed in check order."""
    diags = []
    k = len(t.classes)
    order = t.order
    vals = t.values
    if len(t.degrees) != k or vals.shape[:2] != (k, k):
        diags.append(f"row count {len(t.degrees)} differs from class count {k}")
        return False, diags
    if sum(d * d for d in t.degrees) != order:
        diags.append("sum of squared degrees differs from |G|")
    if t.degrees[0] != 1 or not (vals[0, :, 0] == 1).all() or vals[0, :, 1:].any():
        diags.append("row 0 is not the trivial character")
    for i, d in enumerate(t.degrees):
        if vals[i, 0, 0] != d or vals[i, 0, 1:].any():
            diags.append(f"row {i}: identity-class value is not the degree {d}")
        bad = np.nonzero(vals[i].sum(axis=1) != d)[0]
        if bad.size:
            diags.append(f"row {i}: multiplicities at class {int(bad[0])} do not sum to the degree")
        if order % d:
            diags.append(f"row {i}: degree {d} does not divide |G|")
    e = t.e
    row = canonical(_products(vals, conj(vals), t.classes.sizes, e))
    expect = np.zeros_like(row)
    expect[np.arange(k), np.arange(k), 0] = order
    if not np.array_equal(row, expect):
        i, j = np.argwhere((row != expect).any(axis=2))[0]
        diags.append(f"row orthogonality fails for rows {i}, {j}")
    cols = np.transpose(vals, (1, 0, 2))
    col = canonical(_products_cols(cols, e))
    expect = np.zeros_like(col)
    for s in range(k):
        expect[s, s, 0] = order // t.classes.sizes[s]
    if not np.array_equal(col, expect):
        s, u = np.argwhere((col != expect).any(axis=2))[0]
        diags.append(f"column orthogonality fails for classes {s}, {u}")
    return not diags, diags


def _products_cols(cols, e):
    """acc[s, t] = sum_chi chi(g_s) * conj(chi(g_t))."""
    k = cols.shape[0]
    cc = conj(cols)
    acc = np.zeros((k, k, e), dtype=np.int64)
    supports = [np.nonzero(cols[s].any(axis=0))[0] for s in range(k)]
    csupports = [np.nonzero(cc[s].any(axis=0))[0] for s in range(k)]
    for s in range(k):
        for u in range(k):
            gram = cols[s][:, supports[s]].T @ cc[u][:, csupports[u]]
            pos = (supports[s][:, None] + csupports[u][None, :]) % e
            np.add.at(acc[s, u], pos, gram)
    return acc


# -- restriction to normal subgroups ------------------------------------------------


def _is_normal(g: PermutationGroup, n: PermutationGroup) -> bool:
    if n.degree != g.degree or any(x not in g for x in n.generators):
        return False
    return normal_closure(g, n.generators).order == n.order


def restriction_matrix(t: CharacterTable, n: PermutationGroup, tn: CharacterTable) -> np.ndarray:
    """``R[i, j]`` = <chi_i restricted to N, psi_j> for all rows of both tables."""
    if not _is_normal(t.group, n):
        raise NotNormalError("subgroup is not normal in the group")
    if tn.order != n.order or tn.group.degree != n.degree:
        raise ValueError("table does not belong to the given subgroup")
    if t.e % tn.e:
        raise ValueError("subgroup exponent does not divide the group exponent")
    gcls = [t.classes.class_of(t.group, rep) for rep in tn.classes.representatives]
    step = t.e // tn.e
    psi = np.zeros((len(tn), len(tn.classes), t.e), dtype=np.int64)
    psi[:, :, ::step] = tn.values
    chi = t.values[:, gcls, :]
    acc = canonical(_products(chi, conj(psi), tn.classes.sizes, t.e))
    if acc[:, :, 1:].any() or (acc[:, :, 0] % n.order).any():
        raise TableDefectError("restriction inner products are not integers")
    return acc[:, :, 0] // n.order


def restrict_to_normal(t: CharacterTable, n: PermutationGroup, tn: CharacterTable, row: int) -> list[tuple[int, int]]:
    """Constituents ``(row of tn, multiplicity)`` of character ``row`` restricted to ``n``."""
    mults = restriction_matrix(t, n, tn)[row]
    out = [(int(j), int(m)) for j, m in enumerate(mults) if m]
    degs = {tn.degrees[j] for j, _ in out}
    es = {m for _, m in out}
    if len(degs) != 1 or len(es) != 1 or sum(m * tn.degrees[j] for j, m in out) != t.degrees[row]:
        raise TableDefectError("restriction violates Clifford's theorem")
    return out


# -- serialization -------------------------------------------------------------------


def table_to_dict(t: CharacterTable, spec: str | None = None) -> dict:
    canon = t.canonical_values
    return {
        "chartab-format": CHARTAB_FORMAT,
        "group": spec or t.group.name or "",
        "order": t.order,
        "e": t.e,
        "classes": [
            {"repSize": size, "order": o, "representative": rep.to_cycles()}
            for size, o, rep in zip(t.classes.sizes, t.classes.orders, t.classes.representatives)
        ],
        "rows": [
            {"degree": d, "values": [[int(x) for x in canon[i, c]] for c in range(len(t.classes))]}
            for i, d in enumerate(t.degrees)
        ],
    }


def dumps_table(t: CharacterTable, spec: str | None = None) -> str:
    return json.dumps(table_to_dict(t, spec), separators=(",", ":"))


def format_table(t: CharacterTable) -> str:
    k = len(t.classes)
    header = ["", *(f"{o}{_letter(i, t.classes.orders)}" for i, o in enumerate(t.classes.orders))]
    sizes = ["size", *(str(s) for s in t.classes.sizes)]
    body = [[f"X.{i + 1}", *(format_value(t.values[i, c]) for c in range(k))] for i in range(len(t))]
    grid = [header, sizes, *body]
    widths = [max(len(r[j]) for r in grid) for j in range(k + 1)]
    lines = [f"{t.group.name or 'group'}: order {t.order}, {k} classes, e = {t.e}"]
    lines += ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in grid]
    return "\n".join(lines)


def _letter(i, orders):
    same = [j for j in range(len(orders)) if orders[j] == orders[i]]
    pos = same.index(i)
    out = ""
    pos += 1
    while pos:
        pos, r = divmod(pos - 1, 26)
        out = chr(ord("a") + r) + out
    return out
