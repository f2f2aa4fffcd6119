"""
Laser field model and physical parameters.

Atomic units throughout (hbar = m_e = e = 1). The field is a monochromatic,
linearly polarized wave along z:

    F(t) = F cos(omega t) zhat,     A(t) = -(F/omega) sin(omega t) zhat.

Unit conversions (eV, W/cm^2, um) live in :mod:`qorbit.units` and are only
applied at the CLI/service boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FieldParams:
    """Laser and target parameters, all in atomic units.

    Attributes
    ----------
    F : float
        Electric field amplitude.
    omega : float
        Angular frequency.
    Ip : float
        Ionization potential.
    Z : float
        Effective ion charge seen by the continuum electron (default 1).
    """

    F: float
    omega: float
    Ip: float
    Z: float = 1.0

    def __post_init__(self):
        if not (self.F > 0 and self.omega > 0 and self.Ip > 0):
            raise ValueError(
                f"F, omega, Ip must be positive, got F={self.F}, "
                f"omega={self.omega}, Ip={self.Ip}"
            )

    @property
    def kappa(self) -> float:
        """Characteristic bound-state momentum, kappa = sqrt(2 Ip)."""
        return math.sqrt(2.0 * self.Ip)

    @property
    def gamma(self) -> float:
        """Keldysh parameter gamma = omega kappa / F."""
        return self.omega * self.kappa / self.F

    @property
    def Up(self) -> float:
        """Ponderomotive potential F^2 / (4 omega^2)."""
        return self.F**2 / (4.0 * self.omega**2)

    @property
    def z_quiv(self) -> float:
        """Quiver radius F / omega^2."""
        return self.F / self.omega**2

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    @classmethod
    def from_gamma(cls, gamma: float, F: float, Ip: float, Z: float = 1.0) -> "FieldParams":
        """Build parameters with the frequency set by a target Keldysh parameter."""
        kappa = math.sqrt(2.0 * Ip)
        return cls(F=F, omega=gamma * F / kappa, Ip=Ip, Z=Z)


@dataclass(frozen=True)
class Momentum:
    """Final drift momentum. Cylindrical symmetry: p_y = 0 by convention."""

    px: float
    pz: float

    @property
    def p_perp(self) -> float:
        return abs(self.px)

    @property
    def p2(self) -> float:
        return self.px**2 + self.pz**2


def vector_potential(t, fp: FieldParams):
    """z-component of the vector potential, A_z(t) = -(F/omega) sin(omega t).

    Accepts real or complex scalars and numpy arrays; analytic in t.
    """
    return -(fp.F / fp.omega) * np.sin(fp.omega * t)


def electric_field(t, fp: FieldParams):
    """z-component of the electric field, F_z(t) = F cos(omega t)."""
    return fp.F * np.cos(fp.omega * t)


def derived_params(fp: FieldParams) -> dict:
    """Closed-form derived quantities used throughout."""
    return {"gamma": fp.gamma, "Up": fp.Up, "z_quiv": fp.z_quiv}
