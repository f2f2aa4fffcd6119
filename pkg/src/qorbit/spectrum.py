"""
Photoelectron momentum maps and wavelength-scaling scans.

The momentum map is the incoherent half-cycle sum
(1/2)(|a(px,0,pz)|^2 + |a(px,0,-pz)|^2), shape factor omitted, stored as
log10. Per-node failures are masked, never fatal. Grid scans run on a
worker pool with deterministic output ordering.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .amplitude import amplitude
from .classical import solve_soft_recollision
from .errors import QorbitError
from .orbits import solve_saddle
from .physics import FieldParams, Momentum

LOG10 = math.log(10.0)


def default_jobs() -> int:
    env = os.environ.get("SLALOM_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class SpectrumGrid:
    px_axis: np.ndarray
    pz_axis: np.ndarray
    log10_yield: np.ndarray  # shape (n_px, n_pz); NaN where masked
    mask: np.ndarray         # True where the node failed
    meta: dict = field(default_factory=dict)

    def write_csv(self, path: str) -> None:
        """Metadata comment block, then px,pz,log10_yield rows."""
        with open(path, "w") as fh:
            for k, v in sorted(self.meta.items()):
                fh.write(f"# {k} = {v}\n")
            fh.write("px,pz,log10_yield\n")
            for i, px in enumerate(self.px_axis):
                for j, pz in enumerate(self.pz_axis):
                    v = self.log10_yield[i, j]
                    sval = "nan" if not np.isfinite(v) else f"{v:.10g}"
                    fh.write(f"{px:.10g},{pz:.10g},{sval}\n")

    def write_manifest(self, path: str, extra: dict | None = None) -> None:
        doc = {
            "meta": self.meta,
            "px_axis": self.px_axis.tolist(),
            "pz_axis": self.pz_axis.tolist(),
            "masked_nodes": int(self.mask.sum()),
            "total_nodes": int(self.mask.size),
        }
        if extra:
            doc.update(extra)
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=2)

    @staticmethod
    def read_csv(path: str) -> "SpectrumGrid":
        meta = {}
        rows = []
        with open(path) as fh:
            for line in fh:
                if line.startswith("#"):
                    k, _, v = line[1:].partition("=")
                    meta[k.strip()] = v.strip()
                elif line.strip() and not line.startswith("px,"):
                    rows.append([float(x) for x in line.split(",")])
        arr = np.array(rows)
        px = np.unique(arr[:, 0])
        pz = np.unique(arr[:, 1])
        grid = arr[:, 2].reshape(len(px), len(pz))
        return SpectrumGrid(px_axis=px, pz_axis=pz, log10_yield=grid,
                            mask=~np.isfinite(grid), meta=meta)


def _halfcycle_log10(args) -> float:
    """Worker: log10 of the incoherent half-cycle sum at one node."""
    px, pz, F, omega, Ip, Z, T_periods = args
    fp = FieldParams(F=F, omega=omega, Ip=Ip, Z=Z)
    logs = []
    for pzz in (pz, -pz):
        p = Momentum(px, pzz)
        s = solve_saddle(p, fp)
        T = s.t0 + T_periods * fp.period
        a = amplitude(p, fp, T=T)
        logs.append(2.0 * a.log_amplitude / LOG10)
    m = max(logs)
    return m + math.log10(0.5 * (1.0 + 10.0 ** (min(logs) - m)))


def _safe_worker(args):
    try:
        return _halfcycle_log10(args)
    except (QorbitError, ValueError, OverflowError):
        return None


def momentum_map(fp: FieldParams, px_axis, pz_axis,
                 T_periods: float = 2.75, jobs: int | None = None) -> SpectrumGrid:
    """Incoherent sub-cycle momentum map on the given axes."""
    px_axis = np.asarray(px_axis, dtype=float)
    pz_axis = np.asarray(pz_axis, dtype=float)
    if np.any(np.diff(px_axis) <= 0) or np.any(np.diff(pz_axis) <= 0):
        raise ValueError("axes must be strictly increasing")
    pmax = 3.0 * fp.F / fp.omega
    if max(np.abs(px_axis).max(), np.abs(pz_axis).max()) > pmax:
        raise ValueError(f"grid exceeds sanity bound |p| < 3F/omega = {pmax:.3g}")
    tasks = [(px, pz, fp.F, fp.omega, fp.Ip, fp.Z, T_periods)
             for px in px_axis for pz in pz_axis]
    results = _run_pool(tasks, jobs)
    grid = np.array([math.nan if r is None else r for r in results]
                    ).reshape(len(px_axis), len(pz_axis))
    meta = {
        "F": fp.F, "omega": fp.omega, "Ip": fp.Ip, "Z": fp.Z,
        "gamma": fp.gamma, "T_periods": T_periods,
        "coulomb_tol": 1e-9, "shape_factor": "omitted",
    }
    return SpectrumGrid(px_axis=px_axis, pz_axis=pz_axis, log10_yield=grid,
                        mask=~np.isfinite(grid), meta=meta)


def _run_pool(tasks, jobs):
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(tasks) < 8:
        return [_safe_worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        chunk = max(1, len(tasks) // (8 * jobs))
        return list(ex.map(_safe_worker, tasks, chunksize=chunk))


@dataclass
class WavelengthScan:
    lambdas_um: np.ndarray
    pz_axis: np.ndarray
    log10_yield: np.ndarray        # shape (n_lambda, n_pz)
    px_used: np.ndarray            # transverse momentum per wavelength
    classical_pz_sr: dict          # n -> array of p_z^sr(lambda)
    meta: dict = field(default_factory=dict)


def wavelength_scan(fp_base: FieldParams, lambdas_um, pz_axis,
                    px_multiplier: float = 0.05, T_periods: float = 2.75,
                    sr_orders: tuple[int, ...] = (1, 2, 3, 4),
                    jobs: int | None = None) -> WavelengthScan:
    """On-axis-like yield over (wavelength, p_z), at fixed F and Ip.

    The transverse momentum is chosen per wavelength so the classical
    transverse coordinate at the first soft recollision (omega t ~ 2 pi)
    is px_multiplier/kappa, keeping the contour off the hard Coulomb
    singularity. Classical p_z^sr(lambda) curves are emitted alongside.
    """
    from .units import omega_from_lambda_um

    lambdas_um = np.asarray(lambdas_um, dtype=float)
    pz_axis = np.asarray(pz_axis, dtype=float)
    fps = [FieldParams(F=fp_base.F, omega=omega_from_lambda_um(lam),
                       Ip=fp_base.Ip, Z=fp_base.Z) for lam in lambdas_um]
    for fp in fps:
        if not (0.1 < fp.gamma < 1.2):
            raise ValueError(
                f"lambda range leaves supported gamma window: gamma={fp.gamma:.3g}"
            )
    px_used = np.array([
        (px_multiplier / fp.kappa) * fp.omega / (2.0 * math.pi) for fp in fps
    ])
    tasks = [(px_used[i], pz, fp.F, fp.omega, fp.Ip, fp.Z, T_periods)
             for i, fp in enumerate(fps) for pz in pz_axis]
    results = _run_pool(tasks, jobs)
    grid = np.array([math.nan if r is None else r for r in results]
                    ).reshape(len(lambdas_um), len(pz_axis))
    classical = {}
    for n in sr_orders:
        vals = []
        for fp in fps:
            try:
                vals.append(solve_soft_recollision(n, fp).pz_sr)
            except QorbitError:
                vals.append(math.nan)
        classical[n] = np.array(vals)
    meta = {"F": fp_base.F, "Ip": fp_base.Ip, "Z": fp_base.Z,
            "px_multiplier": px_multiplier, "T_periods": T_periods}
    return WavelengthScan(lambdas_um=lambdas_um, pz_axis=pz_axis,
                          log10_yield=grid, px_used=px_used,
                          classical_pz_sr=classical, meta=meta)
