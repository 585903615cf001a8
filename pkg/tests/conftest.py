import numpy as np
import pytest

from rossbybec import ModelParams, build_mode_grid, tf_radii

# trap parameters of the reference overcritical configuration used throughout
OMEGA_RATIO = 2.4
BETA = 1.6


@pytest.fixture(scope="session")
def disk_equilibrium():
    return tf_radii(0.2, OMEGA_RATIO, BETA)


@pytest.fixture(scope="session")
def annulus_equilibrium():
    return tf_radii(-0.2, OMEGA_RATIO, BETA)


@pytest.fixture(scope="session")
def model_tf():
    """Thomas-Fermi wave model (xi = 0) at the reference drift speed."""
    return ModelParams(v_r=0.1, xi=0.0)


@pytest.fixture(scope="session")
def grid16():
    return build_mode_grid(16, 8.0)


@pytest.fixture(scope="session")
def grid8():
    return build_mode_grid(8, 4.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
