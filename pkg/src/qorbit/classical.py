"""
Classical soft recollisions and the real closest-approach surface.

A soft recollision is a laser-driven turning point at the ion: both the
real longitudinal position and the velocity vanish at the recollision
time t_r. The system solved here, in the unknowns (p_z, t_r), is

    Re[z(t_r)] = 0,       v_z(t_r) = p_z - (F/omega) sin(omega t_r) = 0,

with the tunnel exit evaluated from the full (non-linearized) saddle
solution. Solutions are indexed by n >= 1, with omega t_r ~ (n+1) pi;
odd n recollide after an even number of half-periods (gamma^2 Ip energy
scaling), even n after an odd number (constant fraction of Up).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError
from .orbits import SaddleSolution, solve_saddle, trajectory, velocity
from .physics import FieldParams, Momentum


@dataclass(frozen=True)
class SoftRecollision:
    n: int
    pz_sr: float
    tr: float
    family: str  # "odd" | "even"


@dataclass(frozen=True)
class ClassicalCAPoint:
    t: float
    kind: str  # "turning-min" | "turning-max" | "collision"
    p: Momentum


def linearized_pz_sr(n: int, fp: FieldParams) -> float:
    """Small-p_z approximation of the soft-recollision momentum."""
    g = fp.gamma
    return (fp.F / fp.omega) * (math.sqrt(1.0 + g * g) + (-1.0) ** n) / ((n + 1) * math.pi)


def _recollision_system(pz: float, tr: float, fp: FieldParams):
    p = Momentum(0.0, pz)
    s = solve_saddle(p, fp)
    g1 = trajectory(tr, p, s, fp).z.real
    g2 = pz - (fp.F / fp.omega) * math.sin(fp.omega * tr)
    return g1, g2


def solve_soft_recollision(n: int, fp: FieldParams, tol: float = 1e-12,
                           maxiter: int = 200) -> SoftRecollision:
    """Exact 2D Newton solution of the soft-recollision system.

    Seeded from the linearized momentum and omega t_r ~ (n+1) pi. The
    residual of both equations at the returned point is below 1e-10.
    """
    if n < 1:
        raise ValueError("recollision index n must be >= 1")
    pz = linearized_pz_sr(n, fp)
    tr = ((n + 1) * math.pi + (-1.0) ** (n + 1) * fp.omega * pz / fp.F) / fp.omega
    h_p = 1e-7 * fp.F / fp.omega
    h_t = 1e-7 / fp.omega
    for _ in range(maxiter):
        g1, g2 = _recollision_system(pz, tr, fp)
        if abs(g1) < tol * fp.z_quiv and abs(g2) < tol * fp.F / fp.omega:
            family = "odd" if n % 2 == 1 else "even"
            return SoftRecollision(n=n, pz_sr=pz, tr=tr, family=family)
        # finite-difference Jacobian
        g1p, g2p = _recollision_system(pz + h_p, tr, fp)
        g1t, g2t = _recollision_system(pz, tr + h_t, fp)
        j11 = (g1p - g1) / h_p
        j12 = (g1t - g1) / h_t
        j21 = (g2p - g2) / h_p
        j22 = (g2t - g2) / h_t
        det = j11 * j22 - j12 * j21
        if det == 0:
            break
        dpz = (g1 * j22 - g2 * j12) / det
        dtr = (g2 * j11 - g1 * j21) / det
        pz -= dpz
        tr -= dtr
    raise ConvergenceError(
        f"soft-recollision Newton failed for n={n}, gamma={fp.gamma:.3g}"
    )


def universal_ratios(family: str, count: int, fp: FieldParams) -> list[float]:
    """Consecutive ratios of exact soft-recollision momenta within a family.

    In the tunnelling limit these approach 1/2, 2/3, 3/4, ... (odd) and
    3/5, 5/7, 7/9, ... (even).
    """
    if family == "odd":
        ns = [2 * k + 1 for k in range(count + 1)]
    elif family == "even":
        ns = [2 * k + 2 for k in range(count + 1)]
    else:
        raise ValueError("family must be 'odd' or 'even'")
    pzs = [solve_soft_recollision(n, fp).pz_sr for n in ns]
    return [pzs[i + 1] / pzs[i] for i in range(count)]


def _re_rv(t: np.ndarray, p: Momentum, s: SaddleSolution, fp: FieldParams) -> np.ndarray:
    """Re[r(t).v(t)] for real t (v is real on the real axis)."""
    r = trajectory(t, p, s, fp)
    v = velocity(t, p, fp)
    return r.x.real * v.x.real + r.z.real * v.z.real


def _d2_re_r2(t: float, p: Momentum, s: SaddleSolution, fp: FieldParams,
              h: float) -> float:
    def f(tt):
        r = trajectory(tt, p, s, fp)
        return (r.x.real**2 + r.z.real**2)

    return (f(t + h) - 2.0 * f(t) + f(t - h)) / h**2


def classical_ca_scan(p: Momentum, t_window: tuple[float, float],
                      fp: FieldParams, s: SaddleSolution | None = None,
                      n_grid: int = 10_000) -> list[ClassicalCAPoint]:
    """All real closest-approach roots Re[r(t).v(t)] = 0 in the window.

    On axis (p_x = 0) the equation factorizes; roots are split into
    turning points (v_z = 0) and collisions (Re z = 0). Off axis, roots
    are classified as minima or maxima of Re(r^2) by the sign of its
    second derivative. Double roots at cusps are reported twice.
    """
    from scipy.optimize import brentq

    if s is None:
        s = solve_saddle(p, fp)
    t0, t1 = t_window
    h = 1e-5 / fp.omega

    def classify(t: float) -> str:
        return "turning-min" if _d2_re_r2(t, p, s, fp, h) > 0 else "turning-max"

    points: list[ClassicalCAPoint] = []
    if p.px == 0.0:
        # v_z = 0 branch
        tt = np.linspace(t0, t1, n_grid)
        vz = p.pz - (fp.F / fp.omega) * np.sin(fp.omega * tt)
        for i in np.flatnonzero(np.sign(vz[:-1]) * np.sign(vz[1:]) < 0):
            t = brentq(lambda x: p.pz - (fp.F / fp.omega) * math.sin(fp.omega * x),
                       tt[i], tt[i + 1], xtol=1e-13)
            points.append(ClassicalCAPoint(t=t, kind=classify(t), p=p))
        # Re z = 0 branch
        rez = trajectory(tt, p, s, fp).z.real
        for i in np.flatnonzero(np.sign(rez[:-1]) * np.sign(rez[1:]) < 0):
            t = brentq(lambda x: trajectory(x, p, s, fp).z.real,
                       tt[i], tt[i + 1], xtol=1e-13)
            points.append(ClassicalCAPoint(t=t, kind="collision", p=p))
    else:
        tt = np.linspace(t0, t1, n_grid)
        f = _re_rv(tt, p, s, fp)
        for i in np.flatnonzero(np.sign(f[:-1]) * np.sign(f[1:]) < 0):
            t = brentq(lambda x: float(_re_rv(np.array([x]), p, s, fp)[0]),
                       tt[i], tt[i + 1], xtol=1e-13)
            points.append(ClassicalCAPoint(t=t, kind=classify(t), p=p))
    points.sort(key=lambda c: c.t)
    return points
