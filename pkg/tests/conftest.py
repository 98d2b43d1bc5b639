import numpy as np
import pytest

import hyperzeta as hz


@pytest.fixture(scope="session")
def psi_zeta():
    return hz.psi_zeta_wave()


@pytest.fixture(scope="session")
def psi_zeta_bar(psi_zeta):
    """zeta state on the default transform window."""
    return hz.to_eta_representation(lambda x: hz.psi_lerch_eval(psi_zeta, x),
                                    hz.default_eta_spec())


@pytest.fixture(scope="session")
def psi_zeta_momentum(psi_zeta_bar):
    return hz.mellin_critical(psi_zeta_bar)


@pytest.fixture(scope="session")
def sigma3():
    return hz.SigmaWave.create(3.0)


@pytest.fixture(scope="session")
def sigma1():
    return hz.SigmaWave.create(1.0)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(42)
