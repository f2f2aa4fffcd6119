"""
Branch-cut geometry of the complex distance sqrt(r(t)^2).

The Coulomb potential U(r(t)) = -Z/sqrt(r(t)^2) inherits the principal
square root's cut on the negative real axis of r^2, mapped into the time
plane. Branch points are the (simple) zeros of r(t)^2; since
r^2 = x^2 + z^2 factorizes as (z + i p_perp (t-ts))(z - i p_perp (t-ts)),
they split into two families. Each branch point emits one cut ray, the
preimage of r^2 in (-inf, 0), traced here by a predictor-corrector that
keeps r^2 pinned to the negative real axis.

The recollision topology is "closed" when the cuts cross the real time
axis (contour must hop through the gates) and "open" otherwise. The
wait-free criterion is the sign of Re(v^2) at the outer gate saddles;
classify_topology cross-validates it against explicit cut tracing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .closest_approach import CAPoint, find_ca_roots
from .errors import ConvergenceError
from .orbits import SaddleSolution, trajectory, velocity
from .physics import FieldParams, Momentum


@dataclass(frozen=True)
class BranchPoint:
    t: complex
    family: str  # "plus" | "minus": which root of z = +-i p_perp (t - ts)


@dataclass
class CutCurve:
    points: list[complex]
    crosses_real_axis: bool


@dataclass
class DistanceField:
    """sqrt(r(t)^2) sampled on a rectangular grid, with discontinuity flags."""

    re_axis: np.ndarray
    im_axis: np.ndarray
    values: np.ndarray  # complex, shape (n_im, n_re)
    flags: np.ndarray   # bool, same shape; Im sign flip with small |Re|

    def to_json(self) -> dict:
        return {
            "re_axis": self.re_axis.tolist(),
            "im_axis": self.im_axis.tolist(),
            "re": np.real(self.values).tolist(),
            "im": np.imag(self.values).tolist(),
            "flags": self.flags.astype(int).tolist(),
        }


def r2(t, p: Momentum, s: SaddleSolution, fp: FieldParams):
    r = trajectory(t, p, s, fp)
    return r.x * r.x + r.z * r.z


def sqrt_r2(t, p: Momentum, s: SaddleSolution, fp: FieldParams):
    """Principal branch of the complex distance to the origin."""
    return np.sqrt(r2(t, p, s, fp))


def distance_field(p: Momentum, s: SaddleSolution, fp: FieldParams,
                   region: tuple[float, float, float, float],
                   resolution: tuple[int, int]) -> DistanceField:
    """Sample sqrt(r^2) on a grid and flag cut crossings between
    horizontally adjacent nodes."""
    re0, re1, im0, im1 = region
    n_re, n_im = resolution
    if n_re < 2 or n_im < 2:
        raise ValueError("resolution must be at least 2x2")
    re = np.linspace(re0, re1, n_re)
    im = np.linspace(im0, im1, n_im)
    tt = re[None, :] + 1j * im[:, None]
    v = sqrt_r2(tt, p, s, fp)
    flags = np.zeros(v.shape, dtype=bool)
    scale = np.abs(v)
    # Im flips sign while |Re| stays small relative to |value|: a cut runs
    # between the two nodes
    for axis in (0, 1):
        a = np.swapaxes(v, 0, axis)
        fl = np.swapaxes(flags, 0, axis)
        flip = (np.sign(a.imag[1:]) * np.sign(a.imag[:-1]) < 0)
        small_re = (np.abs(a.real[1:]) + np.abs(a.real[:-1])) < \
            0.5 * (np.abs(a[1:]) + np.abs(a[:-1]))
        fl[1:][flip & small_re] = True
    return DistanceField(re_axis=re, im_axis=im, values=v, flags=flags)


def find_branch_points(p: Momentum, s: SaddleSolution, fp: FieldParams,
                       window: tuple[float, float, float, float],
                       grid: tuple[int, int] = (60, 40)) -> list[BranchPoint]:
    """Zeros of r(t)^2 inside the window, via the factorized Newton solve.

    Requires p_perp > 0; for p_perp = 0 the cuts degenerate to zeros of
    z(t), which are collision points rather than branch points.
    """
    if p.p_perp == 0.0:
        raise ValueError("branch points degenerate at p_perp=0")
    re0, re1, im0, im1 = window
    nr, ni = grid
    seeds = (np.linspace(re0, re1, nr)[:, None]
             + 1j * np.linspace(im0, im1, ni)[None, :]).ravel()
    out: list[BranchPoint] = []
    for sign, name in ((1, "plus"), (-1, "minus")):
        roots = kernels.branch_newton(seeds, sign, p.p_perp, p.pz, s.ts,
                                      fp.F, fp.omega)
        roots = roots[np.isfinite(roots)]
        inside = ((roots.real >= re0) & (roots.real <= re1)
                  & (roots.imag >= im0) & (roots.imag <= im1))
        # ts is a double zero of r^2 (both factors vanish), not a cut end
        inside &= np.abs(roots - s.ts) > 1e-6 / fp.omega
        for t in _dedupe(roots[inside], 1e-6 / fp.omega):
            out.append(BranchPoint(t=t, family=name))
    out.sort(key=lambda b: (b.t.real, b.t.imag))
    return out


def _dedupe(roots: np.ndarray, tol: float) -> list[complex]:
    kept: list[complex] = []
    for t in sorted(roots, key=lambda z: (z.real, z.imag)):
        if not any(abs(t - u) < tol for u in kept):
            kept.append(complex(t))
    return kept


def trace_cut(bp: BranchPoint, p: Momentum, s: SaddleSolution,
              fp: FieldParams,
              window: tuple[float, float] | None = None,
              max_points: int = 4000,
              rel_tol: float = 1e-9) -> CutCurve:
    """Follow the cut ray r^2 in (-inf, 0) from a branch point.

    Predictor-corrector on g(t) = r(t)^2 with g pinned to the negative
    real axis (|Im g| < rel_tol * |g| at every accepted node). Stops when
    |Im t| > 3 tau_T, Re(omega t) leaves the window, or the step
    underflows (proximity to a topology change).
    """
    w = fp.omega
    if window is None:
        window = (s.t0 - math.pi / w, s.t0 + 8.0 * math.pi / w)

    def g(t):
        return complex(r2(t, p, s, fp))

    def dg(t):
        r = trajectory(t, p, s, fp)
        v = velocity(t, p, fp)
        return complex(2.0 * (r.x * v.x + r.z * v.z))

    t = bp.t
    pts = [t]
    h = 1e-3 / w
    h_min = 1e-12 / w
    target = 0.0  # current (negative) real value of g along the cut
    crossed = False
    for _ in range(max_points):
        d = dg(t)
        if d == 0:
            break
        # predictor: move g along the negative real axis by |d|*h
        ds = abs(d) * h
        t_pred = t - h * (d.conjugate() / abs(d))
        target = target - ds
        # corrector: complex Newton pinning g to the scheduled real value
        tc = t_pred
        ok = False
        for _ in range(30):
            gv = g(tc) - target
            if abs(gv) < rel_tol * max(abs(target), 1e-300):
                ok = True
                break
            dv = dg(tc)
            if dv == 0:
                break
            tc = tc - gv / dv
        if not ok or abs(tc - t) > 10.0 * h:
            target = target + ds
            h *= 0.5
            if h < h_min:
                raise ConvergenceError(
                    "cut trace step underflow (near a topology change?)"
                )
            continue
        if t.imag * tc.imag < 0 or tc.imag == 0:
            crossed = True
        t = tc
        pts.append(t)
        h = min(2.0 * h, 0.2 / w)
        if abs(t.imag) > 3.0 * s.tau_T or not (window[0] <= t.real <= window[1]):
            break
    return CutCurve(points=pts, crosses_real_axis=crossed)


@dataclass
class TopologyReport:
    kind: str  # "open" | "closed"
    gate_points: list[CAPoint] = field(default_factory=list)
    rev2_criterion: str = ""
    cut_criterion: str = ""
    consistent: bool = True


def classify_topology(p: Momentum, s: SaddleSolution, fp: FieldParams,
                      recollision_window: tuple[float, float, float, float],
                      cross_validate: bool = True) -> TopologyReport:
    """Open/closed recollision topology from the Re(v^2) sign at the outer
    gate saddles, cross-validated against explicit cut tracing.

    An inconsistency between the two criteria is reported in the returned
    record, not silently resolved.
    """
    roots = find_ca_roots(p, s, fp, window=recollision_window)
    if len(roots) < 3:
        raise ConvergenceError(
            f"expected >=3 gate roots in recollision window, got {len(roots)}"
        )
    by_re = sorted(roots, key=lambda c: c.t.real)
    outer = [by_re[0], by_re[-1]]
    closed_v2 = all(c.re_v2 > 0 for c in outer)
    rep = TopologyReport(kind="closed" if closed_v2 else "open",
                         gate_points=by_re,
                         rev2_criterion="closed" if closed_v2 else "open")
    if cross_validate:
        re0, re1, im0, im1 = recollision_window
        bps = find_branch_points(p, s, fp, recollision_window)
        crossed = False
        for bp in bps:
            try:
                c = trace_cut(bp, p, s, fp)
            except ConvergenceError:
                continue
            if c.crosses_real_axis:
                crossed = True
                break
        rep.cut_criterion = "closed" if crossed else "open"
        rep.consistent = (rep.cut_criterion == rep.rev2_criterion)
    return rep
