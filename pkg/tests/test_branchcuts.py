import math

import numpy as np
import pytest

from qorbit.branchcuts import (classify_topology, distance_field,
                               find_branch_points, r2, trace_cut)
from qorbit.orbits import solve_saddle
from qorbit.physics import Momentum


def _recollision_window(s, fp):
    w = fp.omega
    tc = s.t0 + 2 * math.pi / w
    return (tc - 0.6 * math.pi / w, tc + 0.6 * math.pi / w,
            -0.9 * s.tau_T, 0.9 * s.tau_T)


def test_branch_points_are_zeros_of_r2(fp_ar):
    p = Momentum(0.05, 0.4)
    s = solve_saddle(p, fp_ar)
    w = fp_ar.omega
    window = (s.t0, s.t0 + 2.5 * fp_ar.period, -2 * s.tau_T, 2 * s.tau_T)
    bps = find_branch_points(p, s, fp_ar, window)
    assert len(bps) >= 4
    for bp in bps:
        assert abs(r2(bp.t, p, s, fp_ar)) < 1e-10
    assert {b.family for b in bps} == {"plus", "minus"}


def test_branch_points_degenerate_on_axis(fp_ar):
    p = Momentum(0.0, 0.4)
    s = solve_saddle(p, fp_ar)
    with pytest.raises(ValueError):
        find_branch_points(p, s, fp_ar, (0.0, 100.0, -10.0, 10.0))


def test_cut_stays_on_negative_real_r2(fp_ar):
    p = Momentum(0.05, 0.4)
    s = solve_saddle(p, fp_ar)
    window = (s.t0, s.t0 + 2.5 * fp_ar.period, -2 * s.tau_T, 2 * s.tau_T)
    bps = find_branch_points(p, s, fp_ar, window)
    c = trace_cut(bps[0], p, s, fp_ar)
    assert len(c.points) > 5
    vals = np.array([r2(t, p, s, fp_ar) for t in c.points[1:]])
    assert np.all(vals.real < 0)
    assert np.all(np.abs(vals.imag) < 1e-6 * np.abs(vals.real))


def test_topology_transition(fp_ar):
    # the first-soft-recollision cut reconnection: open below, closed above
    Fw = fp_ar.F / fp_ar.omega
    for pz_mult, expected in [(0.063, "open"), (0.0635, "closed")]:
        p = Momentum(0.001, pz_mult * Fw)
        s = solve_saddle(p, fp_ar)
        rep = classify_topology(p, s, fp_ar, _recollision_window(s, fp_ar))
        assert rep.kind == expected
        assert rep.consistent  # Re(v^2) sign criterion agrees with tracing
        assert len(rep.gate_points) == 3


def test_distance_field_flags_cuts(fp_ar):
    p = Momentum(0.001, 0.0635 * fp_ar.F / fp_ar.omega)
    s = solve_saddle(p, fp_ar)
    w = fp_ar.omega
    tc = s.t0 + 2 * math.pi / w
    region = (tc - 0.5 * math.pi / w, tc + 0.5 * math.pi / w,
              -0.5 * s.tau_T, 0.5 * s.tau_T)
    df = distance_field(p, s, fp_ar, region, (120, 80))
    assert df.values.shape == (80, 120)
    assert df.flags.any()  # cuts cross this window in the closed topology
    j = df.to_json()
    assert len(j["re"]) == 80 and len(j["re"][0]) == 120


def test_distance_field_resolution_guard(fp_ar):
    p = Momentum(0.05, 0.4)
    s = solve_saddle(p, fp_ar)
    with pytest.raises(ValueError):
        distance_field(p, s, fp_ar, (0, 1, -1, 1), (1, 5))
