"""Compare the numba and numpy kernel backends.

Two views:

* micro: each kernel called directly on data from a real group, both modules
  loaded side by side (numba timings exclude the first, compiling call);
* end to end: ``conjugacy_classes`` + ``character_table`` in a fresh
  interpreter per backend, selected through ``SQFCHAR_BACKEND``.

Usage::

    python3 benchmarks/bench_kernels.py [--groups "Alt(8),Sym(7),named:Sz8"] [--repeat 5]
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from sqfchar.constructors import construct
from sqfchar.kernels import get_backend


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def micro(spec, repeat):
    g = construct(spec)
    imgs = np.ascontiguousarray(g.elements[:, g._base])
    codes, index = g._lookup_table
    rng = np.random.default_rng(0)
    p = 2**31 - 1
    mat = rng.integers(0, p, size=(120, 120)).astype(np.int64)
    rows = []
    for name in ("numba", "numpy"):
        k = get_backend(name)
        k.base_codes(imgs[:2], g._radix)  # compile outside the timing
        k.lookup(imgs[:2], g._radix, codes, index)
        k.rref_mod(mat[:4, :4].copy(), p)
        rows.append((
            name,
            best_of(lambda: k.base_codes(imgs, g._radix), repeat),
            best_of(lambda: k.lookup(imgs, g._radix, codes, index), repeat),
            best_of(lambda: k.rref_mod(mat.copy(), p), repeat),
        ))
    return rows


_E2E = """
import json, time
from sqfchar.chartab import character_table
from sqfchar.constructors import construct
from sqfchar.group import conjugacy_classes
construct('Alt(5)').order; character_table(construct('Alt(5)'))  # warm-up (numba compile / cache load)
g = construct(SPEC)
t0 = time.perf_counter(); cls = conjugacy_classes(g); t1 = time.perf_counter()
t = character_table(g); t2 = time.perf_counter()
print(json.dumps({"classes": t1 - t0, "table": t2 - t1, "k": len(cls)}))
"""


def end_to_end(spec, backend):
    env = dict(os.environ, SQFCHAR_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", _E2E.replace("SPEC", repr(spec))], env=env, capture_output=True, text=True, check=True
    ).stdout
    return json.loads(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", default="Alt(8),Sym(7),named:Sz8")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    specs = [s.strip() for s in args.groups.split(",")]

    print("micro (best of %d, seconds)" % args.repeat)
    print(f"{'group':<14}{'backend':<8}{'base_codes':>12}{'lookup':>12}{'rref_mod':>12}")
    for spec in specs:
        for name, a, b, c in micro(spec, args.repeat):
            print(f"{spec:<14}{name:<8}{a:>12.5f}{b:>12.5f}{c:>12.5f}")

    print("\nend to end (fresh process per backend, seconds)")
    print(f"{'group':<14}{'backend':<8}{'classes':>10}{'table':>10}")
    for spec in specs:
        for name in ("numba", "numpy"):
            r = end_to_end(spec, name)
            print(f"{spec:<14}{name:<8}{r['classes']:>10.3f}{r['table']:>10.3f}")


if __name__ == "__main__":
    main()
