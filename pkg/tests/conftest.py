import pytest

from pdmsusy.core.models import OrderingParams, SystemConfig
from pdmsusy.core.ordering import preset
from pdmsusy.massmodel.grid import Grid


@pytest.fixture
def reference_system() -> SystemConfig:
    """hbar = m0 = c = 1, V0 = 2: kappa = 1."""
    return SystemConfig(hbar=1.0, m0=1.0, c=1.0, V0=2.0)


@pytest.fixture
def moderate_grid() -> Grid:
    """Resolves the unit mass scale (spacing 0.05) at a fraction of the reference cost."""
    return Grid(-36.0, 8.0, 879)


@pytest.fixture
def zhu_kroemer() -> OrderingParams:
    return preset("zhu-kroemer").params


@pytest.fixture
def bendaniel_duke() -> OrderingParams:
    return preset("bendaniel-duke").params
