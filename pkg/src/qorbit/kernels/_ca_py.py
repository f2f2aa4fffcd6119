"""Pure-numpy fallback kernels.

Vectorized Newton iterations shared by the closest-approach and
branch-point solvers. The compiled extension in ``_ca_ext.pyx`` mirrors
these signatures exactly.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def ca_newton(seeds, px, pz, ts, F, omega, tol=1e-12, maxiter=60):
    """Newton iteration on f(t) = r(t).v(t) from every seed simultaneously.

    f(t)  = px^2 (t - ts) + z(t) vz(t)
    f'(t) = px^2 + vz(t)^2 - z(t) F cos(omega t)

    Returns a complex array of the same length as ``seeds``; entries that
    failed to converge are NaN.
    """
    t = np.array(seeds, dtype=np.complex128)
    active = np.ones(t.shape, dtype=bool)
    cos_ts = np.cos(omega * ts)
    for _ in range(maxiter):
        if not active.any():
            break
        ta = t[active]
        dt = ta - ts
        z = pz * dt + (F / omega**2) * (np.cos(omega * ta) - cos_ts)
        vz = pz - (F / omega) * np.sin(omega * ta)
        f = px * px * dt + z * vz
        df = px * px + vz * vz - z * F * np.cos(omega * ta)
        step = np.where(df != 0, f / np.where(df != 0, df, 1.0), np.nan)
        ta = ta - step
        t[active] = ta
        done = np.abs(f) < tol
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    # mark non-converged as NaN
    dt = t - ts
    z = pz * dt + (F / omega**2) * (np.cos(omega * t) - cos_ts)
    vz = pz - (F / omega) * np.sin(omega * t)
    f = px * px * dt + z * vz
    bad = ~(np.abs(f) < tol) | ~np.isfinite(t)
    t[bad] = np.nan + 1j * np.nan
    return t


def branch_newton(seeds, sign, px, pz, ts, F, omega, tol=1e-13, maxiter=60):
    """Newton on g(t) = z(t) - sign*i*px*(t - ts) from every seed.

    Zeros of g are the branch points of sqrt(r(t)^2) in the family
    z = +i p_perp (t-ts) (sign=+1) or z = -i p_perp (t-ts) (sign=-1).
    """
    t = np.array(seeds, dtype=np.complex128)
    cos_ts = np.cos(omega * ts)
    c = 1j * sign * px
    for _ in range(maxiter):
        dt = t - ts
        z = pz * dt + (F / omega**2) * (np.cos(omega * t) - cos_ts)
        g = z - c * dt
        dg = pz - (F / omega) * np.sin(omega * t) - c
        t = t - g / dg
    dt = t - ts
    z = pz * dt + (F / omega**2) * (np.cos(omega * t) - cos_ts)
    g = z - c * dt
    bad = ~(np.abs(g) < tol) | ~np.isfinite(t)
    t[bad] = np.nan + 1j * np.nan
    return t
