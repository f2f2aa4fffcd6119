import math

import numpy as np
import pytest

from qorbit.physics import (FieldParams, Momentum, derived_params,
                            electric_field, vector_potential)
from qorbit.units import argon_params


def test_argon_benchmark_parameters(fp_ar):
    # frozen from the closed-form conversions: Ar (15.76 eV) at 9e13 W/cm^2,
    # 0.99 um
    assert fp_ar.F == pytest.approx(0.05064095356449193, rel=1e-12)
    assert fp_ar.omega == pytest.approx(0.04602358841331383, rel=1e-12)
    assert fp_ar.gamma == pytest.approx(0.9781295361932568, rel=1e-12)
    assert fp_ar.kappa == pytest.approx(math.sqrt(2.0 * fp_ar.Ip), rel=1e-14)


def test_derived_quantities_closed_forms():
    fp = FieldParams(F=0.05, omega=0.045, Ip=0.579)
    assert fp.Up == pytest.approx(fp.F**2 / (4 * fp.omega**2), rel=1e-14)
    assert fp.z_quiv == pytest.approx(fp.F / fp.omega**2, rel=1e-14)
    assert fp.period == pytest.approx(2 * math.pi / fp.omega, rel=1e-14)
    d = derived_params(fp)
    assert set(d) == {"gamma", "Up", "z_quiv"}


def test_from_gamma_round_trip():
    fp = FieldParams.from_gamma(0.31, 0.0506, 0.579)
    assert fp.gamma == pytest.approx(0.31, rel=1e-14)


def test_invalid_parameters_rejected():
    with pytest.raises(ValueError):
        FieldParams(F=-0.05, omega=0.045, Ip=0.5)
    with pytest.raises(ValueError):
        FieldParams(F=0.05, omega=0.0, Ip=0.5)


def test_field_and_potential_consistency(fp_ar, rng):
    # F(t) = -dA/dt, checked by central differences at random times
    t = rng.uniform(0.0, 2 * fp_ar.period, 50)
    h = 1e-6
    dA = (vector_potential(t + h, fp_ar) - vector_potential(t - h, fp_ar)) / (2 * h)
    assert np.allclose(electric_field(t, fp_ar), -dA, atol=1e-7)


def test_vector_potential_amplitude(fp_ar):
    t = np.linspace(0, fp_ar.period, 10001)
    assert np.abs(vector_potential(t, fp_ar)).max() == pytest.approx(
        fp_ar.F / fp_ar.omega, rel=1e-6)


def test_momentum_helpers():
    p = Momentum(-0.3, 0.4)
    assert p.p_perp == 0.3
    assert p.p2 == pytest.approx(0.25, rel=1e-14)


def test_argon_params_intensity_override():
    fp = argon_params(intensity_wcm2=4 * 9e13)
    assert fp.F == pytest.approx(2 * argon_params().F, rel=1e-12)
