import numpy as np
import pytest

from qorbit.physics import FieldParams
from qorbit.units import argon_params


@pytest.fixture(scope="session")
def fp_ar() -> FieldParams:
    """Argon at 9e13 W/cm^2, 0.99 um: gamma ~ 0.98."""
    return argon_params()


@pytest.fixture(scope="session")
def fp_mir(fp_ar) -> FieldParams:
    """Same field and target at gamma = 0.31 (mid-IR driver)."""
    return FieldParams.from_gamma(0.31, fp_ar.F, fp_ar.Ip)


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20260823)
