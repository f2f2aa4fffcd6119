"""
Automatic integration-contour construction from closest-approach times.

The rule set keeps a closest-approach time t_CA when

    Re(omega t_CA) > omega t0 + pi/5
      and -tau_T/3 < Im(t_CA) <= Im(t_kappa)
      and Re(v(t_CA)^2) > -u,
or  -pi/2 < Re(omega t_CA) < pi/2 and 0 <= Im(t_CA) < tau_T,
or   pi/2 < Re(omega t_CA) < 3 pi/2 and Im(t_CA) > 0,

with u an adjustable energy tolerance (default 1e-8 a.u.). The contour is
the piecewise-linear path from the start time through the selected gates,
sorted by Re(t), down to the real detection time T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .branchcuts import sqrt_r2
from .closest_approach import CAPoint
from .orbits import SaddleSolution
from .physics import FieldParams, Momentum


@dataclass
class ContourPath:
    """Piecewise-linear complex-time contour; first node is the start
    (ts or t_kappa), last node is the real detection time."""

    nodes: list[complex]
    selected_ca: list[CAPoint] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"nodes": [[t.real, t.imag] for t in self.nodes]}

    @classmethod
    def from_nodes(cls, nodes: list[complex]) -> "ContourPath":
        return cls(nodes=list(nodes))

    def samples(self, n_total: int) -> np.ndarray:
        """n_total points distributed over the segments proportionally to
        their length (at least 2 per segment)."""
        nodes = np.asarray(self.nodes, dtype=np.complex128)
        seg = np.abs(np.diff(nodes))
        total = seg.sum()
        out = []
        for i, L in enumerate(seg):
            n = max(2, int(round(n_total * L / total))) if total > 0 else 2
            u = np.linspace(0.0, 1.0, n, endpoint=(i == len(seg) - 1))
            out.append(nodes[i] + u * (nodes[i + 1] - nodes[i]))
        return np.concatenate(out)


def select_gates(roots: list[CAPoint], s: SaddleSolution, fp: FieldParams,
                 u: float = 1e-8) -> list[CAPoint]:
    """Apply the gate-selection rules; returns roots sorted by Re(t)."""
    w = fp.omega
    wt0 = w * s.t0
    im_tk = s.t_kappa.imag
    keep = []
    for c in roots:
        wre = w * c.t.real
        im = c.t.imag
        rule1 = (wre > wt0 + math.pi / 5.0
                 and -s.tau_T / 3.0 < im <= im_tk
                 and c.re_v2 > -u)
        rule2 = (-math.pi / 2.0 < wre < math.pi / 2.0
                 and 0.0 <= im < s.tau_T)
        rule3 = (math.pi / 2.0 < wre < 1.5 * math.pi and im > 0.0)
        if rule1 or rule2 or rule3:
            keep.append(c)
    keep.sort(key=lambda c: c.t.real)
    return keep


def build_contour(gates: list[CAPoint], s: SaddleSolution, fp: FieldParams,
                  T: float, start: complex | None = None) -> ContourPath:
    """Piecewise-linear contour start -> gates... -> T (real).

    The default start is ts; the Coulomb integral uses start=t_kappa.
    With no selected gates ahead of the start this reduces to the
    standard contour start -> t0 -> T. Node sequence is Re-monotone
    after the initial descent.
    """
    if start is None:
        start = s.ts
    nodes = [start]
    used: list[CAPoint] = []
    re_floor = start.real
    for c in gates:
        if c.t.real <= re_floor:
            continue
        nodes.append(c.t)
        used.append(c)
        re_floor = c.t.real
    if not used:
        # standard contour: straight down, then along the real axis
        if T > start.real:
            nodes.append(complex(start.real, 0.0))
    nodes.append(complex(T, 0.0))
    # drop zero-length duplicates
    cleaned = [nodes[0]]
    for t in nodes[1:]:
        if abs(t - cleaned[-1]) > 1e-14:
            cleaned.append(t)
    return ContourPath(nodes=cleaned, selected_ca=used)


@dataclass
class ContourReport:
    continuous: bool
    max_jump: float
    nearest_singularity_distance: float
    n_flips: int = 0

    def to_json(self) -> dict:
        return {
            "continuous": self.continuous,
            "max_jump": self.max_jump,
            "nearest_singularity_distance": self.nearest_singularity_distance,
            "n_flips": self.n_flips,
        }


def validate_contour(path: ContourPath, p: Momentum, s: SaddleSolution,
                     fp: FieldParams, n_samples: int = 10_000) -> ContourReport:
    """Sample sqrt(r^2) densely along the path and flag cut crossings.

    A crossed cut shows as a sign flip of Im(sqrt(r^2)) while |Re| is
    small; max_jump is the largest relative jump of U between adjacent
    samples. Report-only; never raises.
    """
    tt = path.samples(n_samples)
    d = sqrt_r2(tt, p, s, fp)
    absd = np.abs(d)
    nearest = float(absd.min())
    flips = ((np.sign(d.imag[1:]) * np.sign(d.imag[:-1]) < 0)
             & ((np.abs(d.real[1:]) + np.abs(d.real[:-1]))
                < 0.5 * (absd[1:] + absd[:-1])))
    n_flips = int(np.count_nonzero(flips))
    with np.errstate(divide="ignore", invalid="ignore"):
        u = 1.0 / d
        du = np.abs(np.diff(u))
        scale = np.maximum(np.abs(u[1:]), np.abs(u[:-1]))
        rel = np.where(scale > 0, du / scale, 0.0)
    rel = rel[np.isfinite(rel)]
    return ContourReport(continuous=(n_flips == 0),
                         max_jump=float(rel.max()) if rel.size else 0.0,
                         nearest_singularity_distance=nearest,
                         n_flips=n_flips)
