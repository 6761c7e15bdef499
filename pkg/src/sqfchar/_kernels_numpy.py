"""Pure-numpy implementations of the hot kernels.

Elements of a group are rows of an ``(N, degree)`` image array. An element is
identified by the integer code of its base images, ``sum(img[b_i] * radix**i)``;
``sorted_codes``/``sorted_index`` form the lookup table from code to row.
"""

import numpy as np


def base_codes(base_images, radix):
    base_images = np.asarray(base_images, dtype=np.int64)
    weights = radix ** np.arange(base_images.shape[1], dtype=np.int64)
    return base_images @ weights


def lookup(base_images, radix, sorted_codes, sorted_index):
    codes = base_codes(base_images, radix)
    pos = np.searchsorted(sorted_codes, codes)
    pos = np.minimum(pos, len(sorted_codes) - 1)
    found = sorted_codes[pos] == codes
    return np.where(found, sorted_index[pos], -1)


def conjugacy_labels(elements, gens, gens_inv, base, radix, sorted_codes, sorted_index):
    n = elements.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    ncls = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = ncls
        frontier = np.array([start], dtype=np.int64)
        while frontier.size:
            rows = elements[frontier]
            found = []
            for s, sinv in zip(gens, gens_inv):
                # (s^-1 g s)[b] = s[g[s^-1[b]]]
                imgs = s[rows[:, sinv[base]]]
                found.append(lookup(imgs, radix, sorted_codes, sorted_index))
            cand = np.unique(np.concatenate(found))
            cand = cand[labels[cand] < 0]
            labels[cand] = ncls
            frontier = cand
        ncls += 1
    return labels, ncls


def structure_counts(elements, members, reps, base, radix, sorted_codes, sorted_index, labels, k):
    counts = np.zeros((k, k), dtype=np.int64)
    w_base = elements[members][:, base]
    for t in range(k):
        # (w z)[b] = z[w[b]]
        idx = lookup(reps[t][w_base], radix, sorted_codes, sorted_index)
        counts[:, t] = np.bincount(labels[idx], minlength=k)
    return counts


def rref_mod(a, p):
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)
