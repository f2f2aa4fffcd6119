"""
Local HTTP service exposing the core as JSON endpoints for the
interactive dashboard.

Stateless: every response is a pure function of (SessionConfig, request
body). Field parameters are fixed at startup; requests carry momentum,
optional contour node lists, and region/resolution for field grids.

Errors: 400 malformed body (FastAPI/pydantic emits 422 for schema
violations, which we also use for physics-domain violations), 504 when a
single request exceeds the compute timeout.
"""

from __future__ import annotations

import asyncio
import math
from dataclasses import dataclass

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .amplitude import amplitude, assemble, coulomb_action, navigate
from .branchcuts import distance_field, find_branch_points, trace_cut
from .closest_approach import find_ca_roots
from .contours import ContourPath, validate_contour
from .errors import QorbitError
from .orbits import solve_saddle, trajectory
from .physics import FieldParams, Momentum


@dataclass(frozen=True)
class SessionConfig:
    fp: FieldParams
    T_periods: float = 2.75
    max_grid: tuple[int, int] = (1200, 800)
    timeout_s: float = 30.0


class MomentumBody(BaseModel):
    px: float
    pz: float


class RegionBody(MomentumBody):
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    n_re: int = Field(default=300, ge=2)
    n_im: int = Field(default=200, ge=2)


class ContourBody(MomentumBody):
    nodes: list[list[float]]  # [[re, im], ...]
    n_trajectory_samples: int = Field(default=400, ge=2, le=20000)


def _cpx(pair: list[float]) -> complex:
    return complex(pair[0], pair[1])


def create_app(cfg: SessionConfig) -> FastAPI:
    app = FastAPI(title="qorbit explorer", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"],
    )
    fp = cfg.fp

    async def run(fn, *args):
        try:
            return await asyncio.wait_for(asyncio.to_thread(fn, *args),
                                          timeout=cfg.timeout_s)
        except asyncio.TimeoutError:
            raise HTTPException(504, "compute timeout")
        except QorbitError as exc:
            raise HTTPException(422, f"numerical failure: {exc}")
        except (ValueError, OverflowError) as exc:
            raise HTTPException(422, str(exc))

    def _saddle(p: Momentum):
        s = solve_saddle(p, fp)
        return s, s.t0 + cfg.T_periods * fp.period

    @app.get("/config")
    async def config():
        return {"F": fp.F, "omega": fp.omega, "Ip": fp.Ip, "Z": fp.Z,
                "gamma": fp.gamma, "kappa": fp.kappa,
                "T_periods": cfg.T_periods, "max_grid": list(cfg.max_grid)}

    @app.post("/saddle")
    async def saddle(body: MomentumBody):
        def work():
            s, _ = _saddle(Momentum(body.px, body.pz))
            return {"ts": [s.ts.real, s.ts.imag],
                    "t_kappa": [s.t_kappa.real, s.t_kappa.imag],
                    "t0": s.t0, "tau_T": s.tau_T, "z_exit": s.z_exit}
        return await run(work)

    @app.post("/tca")
    async def tca(body: MomentumBody):
        def work():
            p = Momentum(body.px, body.pz)
            s, T = _saddle(p)
            roots = find_ca_roots(p, s, fp, T=T)
            return {"roots": [{"t": [c.t.real, c.t.imag], "re_v2": c.re_v2,
                               "im_sign": c.im_sign, "residual": c.residual}
                              for c in roots]}
        return await run(work)

    @app.post("/branchmap")
    async def branchmap(body: RegionBody):
        if body.n_re > cfg.max_grid[0] or body.n_im > cfg.max_grid[1]:
            raise HTTPException(
                422, f"resolution capped at {cfg.max_grid[0]}x{cfg.max_grid[1]}"
            )
        def work():
            p = Momentum(body.px, body.pz)
            s, T = _saddle(p)
            region = (body.re_min, body.re_max, body.im_min, body.im_max)
            fieldg = distance_field(p, s, fp, region, (body.n_re, body.n_im))
            cuts = []
            if p.p_perp > 0.0:
                for bp in find_branch_points(p, s, fp, region):
                    try:
                        c = trace_cut(bp, p, s, fp)
                    except QorbitError:
                        continue
                    cuts.append({
                        "branch_point": [bp.t.real, bp.t.imag],
                        "family": bp.family,
                        "crosses_real_axis": c.crosses_real_axis,
                        "points": [[t.real, t.imag] for t in c.points],
                    })
            gates = find_ca_roots(p, s, fp, T=T)
            return {"field": fieldg.to_json(),
                    "cuts": cuts,
                    "gates": [{"t": [c.t.real, c.t.imag], "re_v2": c.re_v2}
                              for c in gates]}
        return await run(work)

    @app.post("/contour/auto")
    async def contour_auto(body: MomentumBody):
        def work():
            p = Momentum(body.px, body.pz)
            s, T = _saddle(p)
            path = navigate(p, s, fp, T)
            return {"contour": path.to_json()}
        return await run(work)

    @app.post("/contour/validate")
    async def contour_validate(body: ContourBody):
        if len(body.nodes) < 2:
            raise HTTPException(422, "contour needs at least 2 nodes")
        def work():
            p = Momentum(body.px, body.pz)
            s, _ = _saddle(p)
            path = ContourPath.from_nodes([_cpx(n) for n in body.nodes])
            rep = validate_contour(path, p, s, fp)
            out = {"validation": rep.to_json(), "coulomb_action": None,
                   "amplitude": None}
            if rep.continuous:
                w_c = coulomb_action(path, p, s, fp, check_continuity=False)
                T = path.nodes[-1].real
                a = assemble(p, fp, s, T, w_c)
                out["coulomb_action"] = [w_c.real, w_c.imag]
                out["amplitude"] = a.to_json()
            return out
        return await run(work)

    @app.post("/trajectory")
    async def trajectory_route(body: ContourBody):
        if len(body.nodes) < 2:
            raise HTTPException(422, "contour needs at least 2 nodes")
        def work():
            p = Momentum(body.px, body.pz)
            s, _ = _saddle(p)
            path = ContourPath.from_nodes([_cpx(n) for n in body.nodes])
            tt = path.samples(body.n_trajectory_samples)
            r = trajectory(tt, p, s, fp)
            return {"t": [[t.real, t.imag] for t in tt],
                    "z": [[v.real, v.imag] for v in r.z],
                    "x": [[v.real, v.imag] for v in r.x]}
        return await run(work)

    @app.post("/amplitude")
    async def amplitude_route(body: MomentumBody):
        def work():
            p = Momentum(body.px, body.pz)
            return amplitude(p, fp).to_json()
        return await run(work)

    return app
