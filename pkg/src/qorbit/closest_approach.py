"""
Complex closest-approach times: roots of r(t).v(t) = 0 in the complex
time plane.

These roots are the saddle points of the complex distance sqrt(r(t)^2)
and sit between each facing pair of Coulomb branch cuts, which makes them
the stepping stones for contour navigation. Roots are found by Newton
iteration from a uniform grid of seeds (hot loop in qorbit.kernels) and
deduplicated. No global labels are attached to roots across momenta: a
closed loop in momentum space around a soft recollision permutes the gate
roots cyclically, which monodromy_test verifies by continuous tracking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import TrackingError
from .orbits import SaddleSolution, solve_saddle, trajectory, velocity
from .physics import FieldParams, Momentum


@dataclass(frozen=True)
class CAPoint:
    """A closest-approach root.

    re_v2 is Re[v(t)^2], the classification energy: Re(v^2) > 0 means the
    root is classically accessible (no tunnelling needed to reach it).
    im_sign is the sign of Im(t); residual is |r.v| at the root.
    """

    t: complex
    re_v2: float
    im_sign: int
    residual: float


def ca_function(t, p: Momentum, s: SaddleSolution, fp: FieldParams):
    """f(t) = r(t).v(t); entire in t."""
    r = trajectory(t, p, s, fp)
    v = velocity(t, p, fp)
    return r.x * v.x + r.z * v.z


def default_window(s: SaddleSolution, fp: FieldParams, T: float
                   ) -> tuple[float, float, float, float]:
    """(re_min, re_max, im_min, im_max) for the root search."""
    w = fp.omega
    return (s.ts.real - 0.5 * math.pi / w, T, -2.0 * s.tau_T, 2.0 * s.tau_T)


def _make_point(t: complex, p: Momentum, s: SaddleSolution, fp: FieldParams) -> CAPoint:
    v = velocity(t, p, fp)
    v2 = v.x * v.x + v.z * v.z
    res = abs(ca_function(t, p, s, fp))
    return CAPoint(t=t, re_v2=v2.real, im_sign=int(np.sign(t.imag)),
                   residual=res)


def find_ca_roots(p: Momentum, s: SaddleSolution, fp: FieldParams,
                  window: tuple[float, float, float, float] | None = None,
                  T: float | None = None,
                  grid: tuple[int, int] = (60, 40),
                  residual_tol: float = 1e-10,
                  dedup_scale: float = 1e-6) -> list[CAPoint]:
    """Deduplicated Newton roots of r(t).v(t) = 0 inside the window.

    Seeds on a uniform grid (default 60x40); roots closer than
    dedup_scale/omega are merged; roots outside the window are discarded.
    Every returned root satisfies |r.v| < residual_tol.
    """
    if window is None:
        if T is None:
            T = s.t0 + 2.75 * fp.period
        window = default_window(s, fp, T)
    re0, re1, im0, im1 = window
    nr, ni = grid
    re = np.linspace(re0, re1, nr)
    im = np.linspace(im0, im1, ni)
    seeds = (re[:, None] + 1j * im[None, :]).ravel()
    roots = kernels.ca_newton(seeds, p.px, p.pz, s.ts, fp.F, fp.omega,
                              tol=residual_tol * 1e-2, maxiter=80)
    roots = roots[np.isfinite(roots)]
    inside = ((roots.real >= re0) & (roots.real <= re1)
              & (roots.imag >= im0) & (roots.imag <= im1))
    roots = roots[inside]
    merged = _dedupe(roots, dedup_scale / fp.omega)
    pts = [_make_point(t, p, s, fp) for t in merged]
    pts = [c for c in pts if c.residual < residual_tol]
    pts.sort(key=lambda c: (c.t.real, c.t.imag))
    return pts


def _dedupe(roots: np.ndarray, tol: float) -> list[complex]:
    out: list[complex] = []
    for t in sorted(roots, key=lambda z: (z.real, z.imag)):
        if not any(abs(t - u) < tol for u in out):
            out.append(complex(t))
    return out


def count_roots_argument_principle(p: Momentum, s: SaddleSolution,
                                   fp: FieldParams,
                                   window: tuple[float, float, float, float],
                                   n_samples: int = 8000) -> int:
    """Number of zeros of r.v inside the rectangle, via the winding number
    of f along the boundary. Independent of the Newton path."""
    re0, re1, im0, im1 = window
    n = n_samples // 4
    bottom = np.linspace(re0 + 1j * im0, re1 + 1j * im0, n, endpoint=False)
    right = np.linspace(re1 + 1j * im0, re1 + 1j * im1, n, endpoint=False)
    top = np.linspace(re1 + 1j * im1, re0 + 1j * im1, n, endpoint=False)
    left = np.linspace(re0 + 1j * im1, re0 + 1j * im0, n, endpoint=False)
    path = np.concatenate([bottom, right, top, left, [re0 + 1j * im0]])
    f = ca_function(path, p, s, fp)
    dphase = np.angle(f[1:] / f[:-1])
    if np.max(np.abs(dphase)) > 0.8 * math.pi:
        # refine: phase step too coarse to trust
        return count_roots_argument_principle(p, s, fp, window, 4 * n_samples)
    w = np.sum(dphase) / (2.0 * math.pi)
    return int(round(w))


def _track_roots(roots: np.ndarray, p: Momentum, fp: FieldParams,
                 residual_tol: float = 1e-10) -> np.ndarray:
    """One continuation step: re-polish each tracked root at momentum p."""
    s = solve_saddle(p, fp)
    new = kernels.ca_newton(roots, p.px, p.pz, s.ts, fp.F, fp.omega,
                            tol=residual_tol * 1e-2, maxiter=80)
    if not np.all(np.isfinite(new)):
        raise TrackingError(f"root tracking diverged at p={p}")
    return new


def _continue_roots(roots: np.ndarray, p_from: Momentum, p_to: Momentum,
                    fp: FieldParams, depth: int = 0) -> np.ndarray:
    """Continue tracked roots from p_from to p_to, bisecting the momentum
    step whenever any root moves by more than a third of the current
    minimal pairwise spacing (which would risk hopping to a neighbour)."""
    new = _track_roots(roots, p_to, fp)
    step = np.max(np.abs(new - roots))
    n = len(roots)
    spacing = min(abs(roots[i] - roots[j])
                  for i in range(n) for j in range(i + 1, n))
    if step <= spacing / 3.0:
        return new
    if depth >= 40:
        raise TrackingError(
            f"root continuation cannot resolve near-collision at {p_to}"
        )
    mid = Momentum(0.5 * (p_from.px + p_to.px), 0.5 * (p_from.pz + p_to.pz))
    half = _continue_roots(roots, p_from, mid, fp, depth + 1)
    return _continue_roots(half, mid, p_to, fp, depth + 1)


def monodromy_test(center: Momentum, radius: float, steps: int,
                   fp: FieldParams, loops: int = 1,
                   window_halfwidth: float | None = None) -> list[int]:
    """Track the three gate roots around a closed semicircular momentum
    loop; return the induced permutation as a list (image of each index).

    The loop is the boundary of a half-disk of the given radius around
    ``center`` in the (p_x, p_z) plane: a semicircular arc through
    p_x = center.px + radius, closed by the diameter leg along
    p_x = center.px. Since the dynamics depend on p_x only through
    p_perp^2, this is a closed loop of the physical momentum.
    """
    w = fp.omega
    if window_halfwidth is None:
        window_halfwidth = 0.6 * math.pi / w
    # parametrize: arc theta in [-pi/2, pi/2] (bulging to larger p_x),
    # then diameter leg back down along p_x = center.px
    thetas = np.linspace(-0.5 * math.pi, 0.5 * math.pi, steps)
    arc = [Momentum(center.px + radius * math.cos(th),
                    center.pz + radius * math.sin(th)) for th in thetas]
    leg_pz = np.linspace(center.pz + radius, center.pz - radius, steps)
    leg = [Momentum(center.px, pz) for pz in leg_pz]
    path = arc + leg
    p_start = path[0]
    s0 = solve_saddle(p_start, fp)
    # gate window around the first recollision, omega t ~ 2 pi
    t_center = s0.t0 + 2.0 * math.pi / w
    window = (t_center - window_halfwidth, t_center + window_halfwidth,
              -0.9 * s0.tau_T, 0.9 * s0.tau_T)
    start = find_ca_roots(p_start, s0, fp, window=window)
    if len(start) != 3:
        raise TrackingError(
            f"expected 3 gate roots at {p_start}, found {len(start)}"
        )
    roots = np.array([c.t for c in start], dtype=np.complex128)
    initial = roots.copy()
    for _ in range(loops):
        p_prev = p_start
        for p in path:
            roots = _continue_roots(roots, p_prev, p, fp)
            p_prev = p
    perm = []
    for t in roots:
        j = int(np.argmin(np.abs(initial - t)))
        perm.append(j)
    if sorted(perm) != [0, 1, 2]:
        raise TrackingError(f"tracked roots did not return to start set: {perm}")
    return perm
