"""
Command-line front end.

Subcommands: saddle | classical-sr | tca | cuts | contour | amp |
spectrum | scan-wavelength | serve. Human-unit flags (eV, W/cm^2, um)
are converted at this boundary; every output file references a JSON run
manifest recording the resolved parameters.

Exit codes: 0 ok (possibly with masked-node warnings), 1 invalid
arguments, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from . import __version__
from .errors import QorbitError
from .physics import FieldParams, Momentum
from .units import (HARTREE_EV, INTENSITY_AU_WCM2, argon_params,
                    lambda_um_from_omega, make_params)


def _add_field_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--target", choices=["Ar", "custom"], default="custom",
                    help="Ar presets Ip=15.76 eV")
    sp.add_argument("--ip-ev", type=float, help="ionization potential (eV)")
    sp.add_argument("--intensity", type=float, help="intensity (W/cm^2)")
    sp.add_argument("--lambda-um", type=float, help="wavelength (um)")
    sp.add_argument("--gamma", type=float,
                    help="set frequency from a target Keldysh parameter")
    sp.add_argument("--charge", type=float, default=1.0,
                    help="effective ion charge Z")


def _resolve_field(args) -> FieldParams:
    ip_ev = 15.76 if args.target == "Ar" else args.ip_ev
    if ip_ev is None:
        raise SystemExit("--ip-ev (or --target Ar) is required")
    intensity = args.intensity if args.intensity else 9e13
    if args.gamma is not None:
        F = math.sqrt(intensity / INTENSITY_AU_WCM2)
        return FieldParams.from_gamma(args.gamma, F, ip_ev / HARTREE_EV,
                                      Z=args.charge)
    if args.lambda_um is None:
        raise SystemExit("--lambda-um or --gamma is required")
    return make_params(ip_ev, intensity, args.lambda_um, Z=args.charge)


def _manifest(args, fp: FieldParams, command: str, t_start: float,
              failures: dict | None = None) -> dict:
    return {
        "command": command,
        "tool_version": __version__,
        "params_au": {"F": fp.F, "omega": fp.omega, "Ip": fp.Ip, "Z": fp.Z,
                      "kappa": fp.kappa, "gamma": fp.gamma, "Up": fp.Up},
        "params_human": {
            "Ip_eV": fp.Ip * HARTREE_EV,
            "intensity_Wcm2": fp.F**2 * INTENSITY_AU_WCM2,
            "lambda_um": lambda_um_from_omega(fp.omega),
        },
        "conversion_constants": {
            "hartree_eV": HARTREE_EV,
            "intensity_au_Wcm2": INTENSITY_AU_WCM2,
        },
        "argv": sys.argv[1:],
        "wall_time_s": time.time() - t_start,
        "failures": failures or {},
    }


def _write_json(path: str, doc: dict) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, default=float)
    print(f"wrote {path}")


def cmd_saddle(args) -> int:
    from .orbits import solve_saddle

    fp = _resolve_field(args)
    t0 = time.time()
    p = Momentum(args.px, args.pz)
    s = solve_saddle(p, fp)
    doc = {"ts": [s.ts.real, s.ts.imag],
           "t_kappa": [s.t_kappa.real, s.t_kappa.imag],
           "z_exit": s.z_exit,
           "manifest": _manifest(args, fp, "saddle", t0)}
    _write_json(args.output, doc)
    return 0


def cmd_classical_sr(args) -> int:
    from .classical import linearized_pz_sr, solve_soft_recollision

    fp = _resolve_field(args)
    t0 = time.time()
    lo, _, hi = args.n.partition("..")
    ns = range(int(lo), int(hi or lo) + 1)
    rows = []
    print(f"{'n':>3} {'family':>7} {'pz_sr (a.u.)':>14} {'w*pz/F':>10} "
          f"{'linearized':>11} {'w*tr/pi':>9}")
    for n in ns:
        sr = solve_soft_recollision(n, fp)
        lin = linearized_pz_sr(n, fp)
        print(f"{n:>3} {sr.family:>7} {sr.pz_sr:>14.6g} "
              f"{fp.omega * sr.pz_sr / fp.F:>10.5f} "
              f"{fp.omega * lin / fp.F:>11.5f} "
              f"{fp.omega * sr.tr / math.pi:>9.4f}")
        rows.append({"n": n, "family": sr.family, "pz_sr": sr.pz_sr,
                     "tr": sr.tr, "linearized_pz_sr": lin})
    if args.output:
        _write_json(args.output, {"recollisions": rows,
                                  "manifest": _manifest(args, fp, "classical-sr", t0)})
    return 0


def cmd_tca(args) -> int:
    from .closest_approach import find_ca_roots
    from .orbits import solve_saddle

    fp = _resolve_field(args)
    t0 = time.time()
    p = Momentum(args.px, args.pz)
    s = solve_saddle(p, fp)
    T = s.t0 + args.periods * fp.period
    roots = find_ca_roots(p, s, fp, T=T)
    doc = {"roots": [{"t": [c.t.real, c.t.imag], "re_v2": c.re_v2,
                      "residual": c.residual} for c in roots],
           "manifest": _manifest(args, fp, "tca", t0)}
    _write_json(args.output, doc)
    return 0


def cmd_cuts(args) -> int:
    from .branchcuts import find_branch_points, trace_cut
    from .orbits import solve_saddle

    fp = _resolve_field(args)
    t0 = time.time()
    p = Momentum(args.px, args.pz)
    s = solve_saddle(p, fp)
    w = fp.omega
    window = (s.t0 - 0.5 * math.pi / w, s.t0 + args.periods * fp.period,
              -2.0 * s.tau_T, 2.0 * s.tau_T)
    bps = find_branch_points(p, s, fp, window)
    cuts = []
    failures = 0
    for bp in bps:
        try:
            c = trace_cut(bp, p, s, fp)
            cuts.append({"branch_point": [bp.t.real, bp.t.imag],
                         "family": bp.family,
                         "crosses_real_axis": c.crosses_real_axis,
                         "points": [[t.real, t.imag] for t in c.points]})
        except QorbitError:
            failures += 1
    doc = {"cuts": cuts,
           "manifest": _manifest(args, fp, "cuts", t0,
                                 {"trace_failures": failures})}
    _write_json(args.output, doc)
    return 0


def cmd_contour(args) -> int:
    from .amplitude import navigate
    from .contours import validate_contour
    from .orbits import solve_saddle

    fp = _resolve_field(args)
    t0 = time.time()
    p = Momentum(args.px, args.pz)
    s = solve_saddle(p, fp)
    T = s.t0 + args.periods * fp.period
    path = navigate(p, s, fp, T)
    rep = validate_contour(path, p, s, fp)
    doc = {"contour": path.to_json(), "validation": rep.to_json(),
           "manifest": _manifest(args, fp, "contour", t0)}
    _write_json(args.output, doc)
    return 0


def cmd_amp(args) -> int:
    from .amplitude import amplitude

    fp = _resolve_field(args)
    t0 = time.time()
    p = Momentum(args.px, args.pz)
    a = amplitude(p, fp, T=None)
    doc = a.to_json()
    doc["manifest"] = _manifest(args, fp, "amp", t0)
    _write_json(args.output, doc)
    return 0


def cmd_spectrum(args) -> int:
    from .spectrum import momentum_map

    fp = _resolve_field(args)
    t0 = time.time()
    px = np.linspace(args.px_min, args.px_max, args.nx)
    pz = np.linspace(args.pz_min, args.pz_max, args.nz)
    grid = momentum_map(fp, px, pz, T_periods=args.periods, jobs=args.jobs)
    grid.write_csv(args.output)
    print(f"wrote {args.output}")
    masked = int(grid.mask.sum())
    grid.write_manifest(args.output + ".manifest.json",
                        extra={"manifest": _manifest(args, fp, "spectrum", t0,
                                                     {"masked_nodes": masked})})
    if masked:
        print(f"warning: {masked}/{grid.mask.size} nodes masked", file=sys.stderr)
    return 0


def cmd_scan_wavelength(args) -> int:
    from .spectrum import wavelength_scan

    fp = _resolve_field(args)
    t0 = time.time()
    lams = np.linspace(args.lambda_min, args.lambda_max, args.nl)
    pz = np.linspace(args.pz_min, args.pz_max, args.nz)
    scan = wavelength_scan(fp, lams, pz, px_multiplier=args.px_multiplier,
                           T_periods=args.periods, jobs=args.jobs)
    doc = {
        "lambdas_um": scan.lambdas_um.tolist(),
        "pz_axis": scan.pz_axis.tolist(),
        "px_used": scan.px_used.tolist(),
        "log10_yield": np.where(np.isfinite(scan.log10_yield),
                                scan.log10_yield, None).tolist(),
        "classical_pz_sr": {str(n): v.tolist()
                            for n, v in scan.classical_pz_sr.items()},
        "meta": scan.meta,
        "manifest": _manifest(args, fp, "scan-wavelength", t0),
    }
    _write_json(args.output, doc)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import SessionConfig, create_app

    fp = _resolve_field(args)
    cfg = SessionConfig(fp=fp, T_periods=args.periods,
                        max_grid=(1200, 800), timeout_s=args.timeout)
    uvicorn.run(create_app(cfg), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qorbit",
        description="Coulomb-corrected quantum-orbit ionization amplitudes "
                    "with automatic branch-cut navigation",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def new(name, func, **kw):
        sp = sub.add_parser(name, **kw)
        _add_field_args(sp)
        sp.set_defaults(func=func)
        return sp

    sp = new("saddle", cmd_saddle, help="solve the ionization-time saddle")
    sp.add_argument("--px", type=float, required=True)
    sp.add_argument("--pz", type=float, required=True)
    sp.add_argument("--output", default="saddle.json")

    sp = new("classical-sr", cmd_classical_sr,
             help="classical soft-recollision momenta")
    sp.add_argument("--n", default="1..6", help="index or range, e.g. 1..6")
    sp.add_argument("--output", default=None)

    sp = new("tca", cmd_tca, help="complex closest-approach roots")
    sp.add_argument("--px", type=float, required=True)
    sp.add_argument("--pz", type=float, required=True)
    sp.add_argument("--periods", type=float, default=2.75)
    sp.add_argument("--output", default="tca.json")

    sp = new("cuts", cmd_cuts, help="branch points and traced cuts")
    sp.add_argument("--px", type=float, required=True)
    sp.add_argument("--pz", type=float, required=True)
    sp.add_argument("--periods", type=float, default=2.75)
    sp.add_argument("--output", default="cuts.json")

    sp = new("contour", cmd_contour, help="auto-navigated contour + validation")
    sp.add_argument("--px", type=float, required=True)
    sp.add_argument("--pz", type=float, required=True)
    sp.add_argument("--periods", type=float, default=2.75)
    sp.add_argument("--output", default="contour.json")

    sp = new("amp", cmd_amp, help="amplitude breakdown at one momentum")
    sp.add_argument("--px", type=float, required=True)
    sp.add_argument("--pz", type=float, required=True)
    sp.add_argument("--output", default="amp.json")

    sp = new("spectrum", cmd_spectrum, help="momentum map grid scan")
    sp.add_argument("--px-min", type=float, default=0.001)
    sp.add_argument("--px-max", type=float, default=0.06)
    sp.add_argument("--pz-min", type=float, default=0.1)
    sp.add_argument("--pz-max", type=float, default=0.9)
    sp.add_argument("--nx", type=int, default=60)
    sp.add_argument("--nz", type=int, default=80)
    sp.add_argument("--periods", type=float, default=2.75)
    sp.add_argument("--jobs", type=int, default=None,
                    help="worker pool size (default SLALOM_JOBS or all cores)")
    sp.add_argument("--output", default="spectrum.csv")

    sp = new("scan-wavelength", cmd_scan_wavelength,
             help="yield vs (wavelength, pz) with classical overlays")
    sp.add_argument("--lambda-min", type=float, required=True)
    sp.add_argument("--lambda-max", type=float, required=True)
    sp.add_argument("--nl", type=int, default=15)
    sp.add_argument("--pz-min", type=float, default=0.005)
    sp.add_argument("--pz-max", type=float, default=1.0)
    sp.add_argument("--nz", type=int, default=120)
    sp.add_argument("--px-multiplier", type=float, default=0.05)
    sp.add_argument("--periods", type=float, default=2.75)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--output", default="scan.json")

    sp = new("serve", cmd_serve, help="launch the exploration HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8710)
    sp.add_argument("--periods", type=float, default=2.75)
    sp.add_argument("--timeout", type=float, default=30.0)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except QorbitError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
