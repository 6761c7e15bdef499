"""numba-compiled versions of the hot kernels; same contracts as ``_kernels_numpy``."""

import numpy as np
from numba import njit


@njit(cache=True)
def _find(code, sorted_codes, sorted_index):
    lo = 0
    hi = sorted_codes.shape[0]
    while lo < hi:
        mid = (lo + hi) >> 1
        if sorted_codes[mid] < code:
            lo = mid + 1
        else:
            hi = mid
    if lo < sorted_codes.shape[0] and sorted_codes[lo] == code:
        return sorted_index[lo]
    return -1


@njit(cache=True)
def base_codes(base_images, radix):
    m, kb = base_images.shape
    out = np.empty(m, dtype=np.int64)
    for i in range(m):
        c = 0
        w = 1
        for j in range(kb):
            c += np.int64(base_images[i, j]) * w
            w *= radix
        out[i] = c
    return out


@njit(cache=True)
def lookup(base_images, radix, sorted_codes, sorted_index):
    codes = base_codes(base_images, radix)
    out = np.empty(codes.shape[0], dtype=np.int64)
    for i in range(codes.shape[0]):
        out[i] = _find(codes[i], sorted_codes, sorted_index)
    return out


@njit(cache=True)
def conjugacy_labels(elements, gens, gens_inv, base, radix, sorted_codes, sorted_index):
    n = elements.shape[0]
    ngen = gens.shape[0]
    kb = base.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    ncls = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = ncls
        head = 0
        tail = 0
        queue[tail] = start
        tail += 1
        while head < tail:
            g = queue[head]
            head += 1
            for s in range(ngen):
                c = 0
                w = 1
                for j in range(kb):
                    img = gens[s, elements[g, gens_inv[s, base[j]]]]
                    c += np.int64(img) * w
                    w *= radix
                h = _find(c, sorted_codes, sorted_index)
                if labels[h] < 0:
                    labels[h] = ncls
                    queue[tail] = h
                    tail += 1
        ncls += 1
    return labels, ncls


@njit(cache=True)
def structure_counts(elements, members, reps, base, radix, sorted_codes, sorted_index, labels, k):
    counts = np.zeros((k, k), dtype=np.int64)
    kb = base.shape[0]
    for i in range(members.shape[0]):
        w = members[i]
        for t in range(k):
            c = 0
            wt = 1
            for j in range(kb):
                c += np.int64(reps[t, elements[w, base[j]]]) * wt
                wt *= radix
            h = _find(c, sorted_codes, sorted_index)
            counts[labels[h], t] += 1
    return counts


@njit(cache=True)
def _rref_mod(a, p):
    rows, cols = a.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    npiv = 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        # modular inverse by Fermat
        inv = np.int64(1)
        base_ = a[r, c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base_) % p
            base_ = (base_ * base_) % p
            e >>= 1
        for j in range(cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        pivots[npiv] = c
        npiv += 1
        r += 1
    return a, pivots[:npiv].copy()


def rref_mod(a, p):
    a = np.array(a, dtype=np.int64) % p
    return _rref_mod(a, np.int64(p))
