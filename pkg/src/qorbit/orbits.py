"""
Quantum-orbit kinematics: ionization-time saddle, complex trajectory,
velocity, and the closed-form kinetic action.

The saddle equation  (1/2)(p + A(t_s))^2 + Ip = 0  has the closed-form
solution

    t_s = (1/omega) arcsin((omega/F)(p_z + i kappa_perp)),
    kappa_perp = sqrt(kappa^2 + p_perp^2),

on the branch with Im(t_s) > 0. The trajectory starting at the origin at
t_s is an entire function of t, so all integrals below are path
independent.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import ConvergenceError
from .physics import FieldParams, Momentum


@dataclass(frozen=True)
class SaddleSolution:
    """First-quarter-cycle ionization-time saddle for one momentum.

    t_kappa = ts - i/kappa^2 is the regularized start time of the Coulomb
    integral; z_exit is the real tunnel-exit coordinate Re[z(t0)].
    """

    ts: complex
    t_kappa: complex
    z_exit: float

    @property
    def t0(self) -> float:
        return self.ts.real

    @property
    def tau_T(self) -> float:
        return self.ts.imag


@dataclass(frozen=True)
class ComplexVec3:
    """3-vector with complex components; r2 is the analytic (non-conjugated)
    square x^2 + y^2 + z^2."""

    x: complex
    y: complex
    z: complex

    @property
    def r2(self) -> complex:
        return self.x * self.x + self.y * self.y + self.z * self.z


def saddle_residual(t: complex, p: Momentum, fp: FieldParams) -> complex:
    vz = p.pz - (fp.F / fp.omega) * cmath.sin(fp.omega * t)
    return 0.5 * (p.px**2 + vz * vz) + fp.Ip


def solve_saddle(p: Momentum, fp: FieldParams, tol: float = 1e-12,
                 maxiter: int = 100) -> SaddleSolution:
    """Solve the saddle equation; arcsin closed form polished by Newton.

    Raises ConvergenceError if the polish stalls (pathological parameters).
    """
    kperp = cmath.sqrt(fp.kappa**2 + p.p_perp**2).real
    t = cmath.asin((fp.omega / fp.F) * (p.pz + 1j * kperp)) / fp.omega
    for _ in range(maxiter):
        res = saddle_residual(t, p, fp)
        if abs(res) < tol:
            break
        vz = p.pz - (fp.F / fp.omega) * cmath.sin(fp.omega * t)
        dres = -vz * fp.F * cmath.cos(fp.omega * t)
        t = t - res / dres
    else:
        raise ConvergenceError(
            f"saddle polish did not reach |residual|<{tol} for p={p}"
        )
    if t.imag <= 0:
        raise ConvergenceError(f"saddle landed on Im(ts)<=0 branch for p={p}")
    t_kappa = t - 1j / fp.kappa**2
    z_ex = trajectory(t.real, p, SaddleSolution(t, t_kappa, 0.0), fp).z.real
    return SaddleSolution(ts=t, t_kappa=t_kappa, z_exit=z_ex)


def trajectory(t, p: Momentum, s: SaddleSolution, fp: FieldParams) -> ComplexVec3:
    """Laser-driven position r(t) = int_{ts}^t (p + A(tau)) dtau.

    Entire in t; accepts real or complex scalars and numpy arrays.
    """
    import numpy as np

    dt = t - s.ts
    z = p.pz * dt + (fp.F / fp.omega**2) * (np.cos(fp.omega * t)
                                            - np.cos(fp.omega * s.ts))
    return ComplexVec3(x=p.px * dt, y=0.0 * dt, z=z)


def velocity(t, p: Momentum, fp: FieldParams) -> ComplexVec3:
    """Kinematic velocity v(t) = p + A(t)."""
    import numpy as np

    vz = p.pz - (fp.F / fp.omega) * np.sin(fp.omega * t)
    return ComplexVec3(x=p.px + 0.0 * vz, y=0.0 * vz, z=vz)


def kinetic_action(t1: complex, t2: complex, p: Momentum, fp: FieldParams) -> complex:
    """(1/2) int_{t1}^{t2} (p + A(tau))^2 dtau, via the closed-form
    antiderivative; path independent."""
    return _action_antiderivative(t2, p, fp) - _action_antiderivative(t1, p, fp)


def _action_antiderivative(t: complex, p: Momentum, fp: FieldParams) -> complex:
    F, w = fp.F, fp.omega
    return (0.5 * (p.p2 + F**2 / (2.0 * w**2)) * t
            + (p.pz * F / w**2) * cmath.cos(w * t)
            - (F**2 / (8.0 * w**3)) * cmath.sin(2.0 * w * t))
