"""Timing comparison of the compiled closest-approach kernels against the
pure-numpy fallback.

Run:  python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from qorbit.kernels import _ca_py
from qorbit.orbits import solve_saddle
from qorbit.physics import Momentum
from qorbit.units import argon_params

try:
    from qorbit.kernels import _ca_ext
except ImportError:
    _ca_ext = None


def bench(fn, seeds, args, repeats=5):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(seeds, *args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    fp = argon_params()
    p = Momentum(0.05, 0.4)
    s = solve_saddle(p, fp)
    w = fp.omega
    rng = np.random.default_rng(7)
    n = 60 * 40
    seeds = ((s.t0 + rng.uniform(0.0, 3.0 * fp.period, n))
             + 1j * rng.uniform(-2.0 * s.tau_T, 2.0 * s.tau_T, n))

    print(f"{n} Newton seeds per call, best of 5\n")
    header = f"{'kernel':<14} {'numpy (ms)':>12} {'compiled (ms)':>14} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, args in [
        ("ca_newton", (p.px, p.pz, s.ts, fp.F, w)),
        ("branch_newton", (1, p.p_perp, p.pz, s.ts, fp.F, w)),
    ]:
        t_py, out_py = bench(getattr(_ca_py, name), seeds, args)
        if _ca_ext is None:
            print(f"{name:<14} {t_py*1e3:>12.2f} {'n/a':>14} {'n/a':>9}")
            continue
        t_c, out_c = bench(getattr(_ca_ext, name), seeds, args)
        ok_py = out_py[np.isfinite(out_py)]
        ok_c = out_c[np.isfinite(out_c)]
        assert len(ok_py) == len(ok_c), "backends disagree on convergence count"
        print(f"{name:<14} {t_py*1e3:>12.2f} {t_c*1e3:>14.2f} "
              f"{t_py/t_c:>8.1f}x")
    if _ca_ext is None:
        print("\ncompiled extension not built (QORBIT_SKIP_EXT or no compiler)")


if __name__ == "__main__":
    main()
