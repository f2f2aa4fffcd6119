"""
Ionization amplitude: bound phase, closed-form kinetic action, and the
Coulomb action integrated along the navigated contour.

    a(p) = exp[ i Ip ts ] exp[ -(i/2) int_{ts}^T (p+A)^2 ]
           exp[ -i int_{t_kappa}^T U(r(t)) dt ],

with U(r) = -Z/sqrt(r^2) and the shape factor set to 1. The Coulomb
integral starts at t_kappa = ts - i/kappa^2, which keeps it finite (it
diverges logarithmically as the start approaches ts). Only the kinetic
and Coulomb exponents depend on the detection time T; past the last
recollision Im(U) decays algebraically (~ t^-3) along the real axis, so
the yield converges as T grows but is not exactly T-independent.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable

from scipy.integrate import IntegrationWarning, quad

from .closest_approach import find_ca_roots
from .contours import ContourPath, ContourReport, build_contour, select_gates, validate_contour
from .errors import ContourError, QuadratureError
from .orbits import SaddleSolution, kinetic_action, solve_saddle
from .physics import FieldParams, Momentum


@dataclass(frozen=True)
class AmplitudeBreakdown:
    """All exponents of the amplitude, plus derived yields.

    bound_phase:     i Ip ts
    kinetic_action:  (1/2) int_{ts}^T (p+A)^2 dt
    coulomb_action:  int_{t_kappa}^T U(r(t)) dt
    log_amplitude:   Re[bound_phase - i kinetic_action - i coulomb_action]
    yield_:          |a|^2 with shape factor R = 1
    sfa_log_amplitude / sfa_yield: the same with the Coulomb term zeroed
    """

    bound_phase: complex
    kinetic_action: complex
    coulomb_action: complex
    log_amplitude: float
    yield_: float
    sfa_log_amplitude: float
    sfa_yield: float

    def to_json(self) -> dict:
        c = lambda z: [z.real, z.imag]
        return {
            "bound_phase": c(self.bound_phase),
            "kinetic_action": c(self.kinetic_action),
            "coulomb_action": c(self.coulomb_action),
            "log_amplitude": self.log_amplitude,
            "yield": self.yield_,
            "sfa_log_amplitude": self.sfa_log_amplitude,
            "sfa_yield": self.sfa_yield,
        }


def coulomb_potential_of_time(t: complex, p: Momentum, s: SaddleSolution,
                              fp: FieldParams) -> complex:
    """U(r(t)) = -Z/sqrt(r(t)^2), scalar fast path."""
    dt = t - s.ts
    z = p.pz * dt + (fp.F / fp.omega**2) * (cmath.cos(fp.omega * t)
                                            - cmath.cos(fp.omega * s.ts))
    x = p.px * dt
    return -fp.Z / cmath.sqrt(x * x + z * z)


def coulomb_action(path: ContourPath, p: Momentum, s: SaddleSolution,
                   fp: FieldParams, abs_tol: float = 1e-9,
                   check_continuity: bool = True) -> complex:
    """Adaptive quadrature of U(r(t)) along the contour.

    Subdivides slow segments; raises ContourError on a detected cut
    crossing and QuadratureError if convergence cannot be reached.
    """
    if fp.Z == 0.0:
        return 0.0
    if check_continuity:
        rep = validate_contour(path, p, s, fp, n_samples=4000)
        if not rep.continuous:
            raise ContourError(
                f"contour crosses a branch cut ({rep.n_flips} sign flips)"
            )
    total = 0.0 + 0.0j
    for a, b in zip(path.nodes[:-1], path.nodes[1:]):
        total += _segment_integral(a, b, p, s, fp, abs_tol, depth=0)
    return total


def _segment_integral(a: complex, b: complex, p: Momentum, s: SaddleSolution,
                      fp: FieldParams, abs_tol: float, depth: int) -> complex:
    d = b - a

    def f(u: float) -> complex:
        return coulomb_potential_of_time(a + u * d, p, s, fp) * d

    with warnings.catch_warnings():
        # non-convergence is handled below by subdividing the segment
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(f, 0.0, 1.0, epsabs=abs_tol, epsrel=1e-10, limit=200,
                        complex_func=True, full_output=False)
    if abs(err) > 100.0 * abs_tol:
        if depth >= 8:
            raise QuadratureError(
                f"quadrature not converging on segment {a}->{b} "
                "(unflagged near-singularity?)"
            )
        mid = a + 0.5 * d
        return (_segment_integral(a, mid, p, s, fp, abs_tol, depth + 1)
                + _segment_integral(mid, b, p, s, fp, abs_tol, depth + 1))
    return val


def navigate(p: Momentum, s: SaddleSolution, fp: FieldParams, T: float,
             u: float = 1e-8) -> ContourPath:
    """Default navigator: CA roots -> gate rules -> contour from t_kappa."""
    roots = find_ca_roots(p, s, fp, T=T)
    gates = select_gates(roots, s, fp, u=u)
    return build_contour(gates, s, fp, T, start=s.t_kappa)


def amplitude(p: Momentum, fp: FieldParams, T: float | None = None,
              navigator: Callable[[Momentum, SaddleSolution, FieldParams, float],
                                  ContourPath] | None = None,
              coulomb_tol: float = 1e-9) -> AmplitudeBreakdown:
    """Full amplitude breakdown at one momentum.

    T defaults to t0 + 2.75 laser periods. The navigator maps
    (p, s, fp, T) to the Coulomb contour; the default applies the gate
    rules. Contour and quadrature failures propagate as QorbitError.
    """
    s = solve_saddle(p, fp)
    if T is None:
        T = s.t0 + 2.75 * fp.period
    if navigator is None:
        navigator = navigate
    path = navigator(p, s, fp, T)
    w_c = coulomb_action(path, p, s, fp, abs_tol=coulomb_tol)
    return assemble(p, fp, s, T, w_c)


def assemble(p: Momentum, fp: FieldParams, s: SaddleSolution, T: float,
             w_coulomb: complex) -> AmplitudeBreakdown:
    bound = 1j * fp.Ip * s.ts
    kin = kinetic_action(s.ts, T, p, fp)
    sfa_log = (bound - 1j * kin).real
    log_amp = (bound - 1j * kin - 1j * w_coulomb).real
    return AmplitudeBreakdown(
        bound_phase=bound,
        kinetic_action=kin,
        coulomb_action=w_coulomb,
        log_amplitude=log_amp,
        yield_=_safe_exp(2.0 * log_amp),
        sfa_log_amplitude=sfa_log,
        sfa_yield=_safe_exp(2.0 * sfa_log),
    )


def _safe_exp(x: float) -> float:
    return math.exp(x) if x < 709.0 else math.inf
