"""Time the ASD nearest-surface kernels: numba vs numpy fallback vs distance transform.

    python benchmarks/bench_asd.py --size 64 --repeat 5
"""
import argparse
import time

import numpy as np

from urpc import _kernels
from urpc.metrics import asd, surface


def phantom_pair(size, seed=0):
    rng = np.random.default_rng(seed)
    g = np.indices((size,) * 3).transpose(1, 2, 3, 0)
    c = np.full(3, size / 2)
    r = size / 4
    a = ((g - c) ** 2).sum(-1) <= r * r
    b = ((g - c - rng.uniform(-2, 2, 3)) ** 2).sum(-1) <= (r * 1.1) ** 2
    return a, b


def timeit(fn, repeat):
    fn()  # warm-up (includes JIT compilation)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=64)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    a, b = phantom_pair(args.size)
    pa, pb = np.argwhere(surface(a)), np.argwhere(surface(b))
    print(f"grid {args.size}^3, surface voxels {len(pa)} / {len(pb)}, default backend: {_kernels.BACKEND}")
    rows = []
    if _kernels.HAVE_NUMBA:
        rows.append(("numba kernel", lambda: (_kernels.nearest_distances(pa, pb), _kernels.nearest_distances(pb, pa))))
    rows.append(("numpy fallback", lambda: (_kernels.nearest_distances_numpy(pa, pb),
                                            _kernels.nearest_distances_numpy(pb, pa))))
    rows.append(("asd(method='search')", lambda: asd(a, b)))
    rows.append(("asd(method='edt')", lambda: asd(a, b, "edt")))
    for name, fn in rows:
        print(f"{name:24s} {timeit(fn, args.repeat) * 1e3:9.2f} ms")
    print(f"asd search {asd(a, b):.9f}  edt {asd(a, b, 'edt'):.9f}")


if __name__ == "__main__":
    main()
