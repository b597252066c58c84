#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported side by side from ``planehomeo._accel``, so the
environment flag does not matter here. The first numba call (compilation)
is excluded from the timings.
"""

import argparse
import statistics
import time

import numpy as np

from planehomeo import _accel


def timeit(fn, repeat):
    fn()  # warm up / compile
    ts = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t0)
    return statistics.median(ts)


def cases(rng):
    for n in (1_000, 4_000, 10_000):
        a = rng.normal(size=n) + 1j * rng.normal(size=n)
        b = rng.normal(size=n) + 1j * rng.normal(size=n) + 0.1
        yield f"directed_hausdorff n={n}", lambda k, a=a, b=b: k.directed_hausdorff(a, b)
    r = rng.random(1 << 20)
    yield "radial_forward 2^20", lambda k: k.radial_forward(r, 0.3, 0.05)
    yield "radial_inverse 2^20", lambda k: k.radial_inverse(r, 0.3, 0.05)
    x = rng.normal(size=1 << 20) + 1j * rng.normal(size=1 << 20)
    y = x + 1e-3
    yield "max_abs_diff 2^20", lambda k: k.max_abs_diff(x, y)
    yield "argmin_abs_diff 2^20", lambda k: k.argmin_abs_diff(x, y)
    w = 2.0 * np.exp(2j * np.pi * np.arange(1 << 16) / (1 << 16)) + 0.5
    yield "winding_sum 2^16", lambda k: k.winding_sum(w)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<28}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    for name, fn in cases(rng):
        t_np = timeit(lambda: fn(_accel.numpy_kernels), args.repeat)
        t_nb = timeit(lambda: fn(_accel.numba_kernels), args.repeat)
        print(f"{name:<28}{t_np * 1e3:>12.3f}{t_nb * 1e3:>12.3f}{t_np / t_nb:>9.1f}x", flush=True)


if __name__ == "__main__":
    main()
