#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback.

Each kernel runs on the same inputs under both backends; outputs are compared
for equality before any timing is reported.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from gkforge import _pykernels
from gkforge.perm import Permutation

try:
    from gkforge import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def workloads():
    s7 = np.array([Permutation.from_cycles([(0, 1)], 7).images,
                   Permutation.from_cycles([tuple(range(7))], 7).images], dtype=np.int32)
    # S7 has order 5040, S8 order 40320
    s8 = np.array([Permutation.from_cycles([(0, 1)], 8).images,
                   Permutation.from_cycles([tuple(range(8))], 8).images], dtype=np.int32)
    return {"S7": s7, "S8": s8}


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1

    print(f"{'kernel':<28}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for label, gens in workloads().items():
        elems, rmul, _, _ = _ckernels.closure(gens, 10**6)
        cols = rmul
        start = np.zeros(len(elems), dtype=bool)
        start[0] = True
        cases = {
            f"closure {label}": lambda m: m.closure(gens, 10**6),
            f"element_orders {label}": lambda m: m.element_orders(elems),
            f"orbits {label}": lambda m: m.orbits(list(rmul), len(elems)),
            f"subgroup_closure {label}": lambda m: m.subgroup_closure(cols, start),
        }
        for name, fn in cases.items():
            tp, out_p = timed(lambda: fn(_pykernels), args.repeat)
            tc, out_c = timed(lambda: fn(_ckernels), args.repeat)
            if not same(out_p, out_c):
                print(f"{name}: OUTPUT MISMATCH")
                return 1
            print(f"{name:<28}{tp:>11.4f}{tc:>11.4f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
