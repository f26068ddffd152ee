"""Time the numba and numpy paths of the oracle kernels on random polynomials.

    python benchmarks/bench_kernels.py [--degree 40] [--repeat 200]

The numba path is compiled once before timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from genreg.oracle import kernels


def _time(fn, repeat: int) -> float:
    t = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t) / repeat


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    c = rng.integers(-9, 10, args.degree + 1).astype(np.complex128)
    c[0] = 1
    z0 = kernels.initial_guesses(c)
    exps = rng.integers(0, 4, (60, 3))
    coeffs = rng.normal(size=60).astype(np.complex128)
    pt = rng.normal(size=3) + 1j * rng.normal(size=3)

    cases = {
        "aberth": lambda jit: kernels.aberth(c, z0, use_jit=jit),
        "horner": lambda jit: kernels.horner(c, z0, use_jit=jit),
        "eval_terms": lambda jit: kernels.eval_terms(coeffs, exps, pt, use_jit=jit),
    }
    print(f"numba available: {kernels.HAVE_NUMBA}")
    print(f"{'kernel':<12}{'numpy (us)':>14}{'numba (us)':>14}{'speed-up':>10}")
    for name, fn in cases.items():
        t_np = _time(lambda: fn(False), args.repeat) * 1e6
        if kernels.HAVE_NUMBA:
            fn(True)  # compile
            t_jit = _time(lambda: fn(True), args.repeat) * 1e6
            print(f"{name:<12}{t_np:>14.1f}{t_jit:>14.1f}{t_np / t_jit:>10.1f}x")
        else:
            print(f"{name:<12}{t_np:>14.1f}{'-':>14}{'-':>10}")


if __name__ == "__main__":
    main()
