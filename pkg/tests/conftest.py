import numpy as np
import pytest

from vecbeam.fields import default_grid

W0 = 1e-3
WAVELENGTH = 1.56e-6
RAYLEIGH = np.pi * W0**2 / WAVELENGTH


@pytest.fixture(scope="session")
def grid512():
    return default_grid(W0, 512, extent_factor=8.0)


@pytest.fixture(scope="session")
def grid256():
    return default_grid(W0, 256, extent_factor=8.0)


@pytest.fixture(scope="session")
def grid128():
    return default_grid(W0, 128, extent_factor=8.0)
