import math

import numpy as np
import pytest

from qorbit.amplitude import navigate
from qorbit.closest_approach import CAPoint, find_ca_roots
from qorbit.contours import (ContourPath, build_contour, select_gates,
                             validate_contour)
from qorbit.orbits import solve_saddle
from qorbit.physics import Momentum


def test_standard_contour_when_no_gates(fp_ar):
    p = Momentum(0.3, 0.9)  # far from any soft recollision
    s = solve_saddle(p, fp_ar)
    T = s.t0 + 2.75 * fp_ar.period
    path = build_contour([], s, fp_ar, T)
    assert path.nodes[0] == s.ts
    assert path.nodes[1] == complex(s.t0, 0.0)
    assert path.nodes[-1] == complex(T, 0.0)


def test_contour_nodes_re_monotone(fp_ar):
    p = Momentum(0.001, 0.0635 * fp_ar.F / fp_ar.omega)
    s = solve_saddle(p, fp_ar)
    T = s.t0 + 2.75 * fp_ar.period
    path = navigate(p, s, fp_ar, T)
    res = [t.real for t in path.nodes]
    assert all(a <= b for a, b in zip(res, res[1:]))
    assert path.nodes[-1].imag == 0.0


def test_gate_rules_reject_conjugate_saddle(fp_ar):
    # the conjugate of ts (deep negative imaginary time before t0+pi/5)
    # must never be selected
    p = Momentum(0.05, 0.4)
    s = solve_saddle(p, fp_ar)
    roots = find_ca_roots(p, s, fp_ar)
    gates = select_gates(roots, s, fp_ar)
    conj = min(roots, key=lambda c: abs(c.t - s.ts.conjugate()))
    assert conj not in gates


def test_gate_rules_keep_classically_accessible_gates(fp_ar):
    # just above the topology transition the contour must pick up gate
    # nodes beyond the first recollision
    p = Momentum(0.001, 0.0635 * fp_ar.F / fp_ar.omega)
    s = solve_saddle(p, fp_ar)
    roots = find_ca_roots(p, s, fp_ar)
    gates = select_gates(roots, s, fp_ar)
    late = [c for c in gates
            if fp_ar.omega * (c.t.real - s.t0) > 1.5 * math.pi]
    assert len(late) >= 1


def test_validate_contour_flags_cut_crossing(fp_ar):
    # at a closed-topology momentum the standard contour crosses a cut
    p = Momentum(0.001, 0.0635 * fp_ar.F / fp_ar.omega)
    s = solve_saddle(p, fp_ar)
    T = s.t0 + 2.75 * fp_ar.period
    standard = ContourPath.from_nodes([s.ts, complex(s.t0, 0.0),
                                       complex(T, 0.0)])
    rep = validate_contour(standard, p, s, fp_ar)
    assert not rep.continuous
    assert rep.n_flips > 0


def test_navigated_contour_validates_continuous(fp_ar):
    for pz_mult in (0.05, 0.0635, 0.09):
        p = Momentum(0.001, pz_mult * fp_ar.F / fp_ar.omega)
        s = solve_saddle(p, fp_ar)
        T = s.t0 + 2.75 * fp_ar.period
        path = navigate(p, s, fp_ar, T)
        rep = validate_contour(path, p, s, fp_ar)
        assert rep.continuous, f"pz_mult={pz_mult}: {rep}"


def test_samples_cover_all_segments(fp_ar):
    path = ContourPath.from_nodes([1j, 1.0 + 1j, 2.0])
    tt = path.samples(100)
    assert tt[0] == 1j and tt[-1] == 2.0
    assert len(tt) >= 100


def test_contour_json_round_trip(fp_ar):
    path = ContourPath.from_nodes([1j, 2.0 + 0.5j, 3.0])
    j = path.to_json()
    back = ContourPath.from_nodes([complex(a, b) for a, b in j["nodes"]])
    assert back.nodes == path.nodes
