"""Tests for the exponential mass and potential profile."""

import numpy as np
import pytest

from pdmsusy.core.models import SystemConfig
from pdmsusy.massmodel.profile import ExponentialProfile, bare_potential, mass, mass_d1, mass_d2


class TestExponentialProfile:
    @pytest.mark.parametrize("c", [1.0, -0.5, 3.0])
    def test_log_linear(self, c: float) -> None:
        profile = ExponentialProfile(SystemConfig(m0=2.0, c=c, V0=3.0))
        x = np.linspace(-5.0, 5.0, 101)
        np.testing.assert_allclose(np.diff(np.log(profile.mass(x))) / np.diff(x), c, rtol=1e-10)
        np.testing.assert_allclose(profile.mass_d1(x) / profile.mass(x), c, rtol=1e-14)
        np.testing.assert_allclose(profile.mass_d2(x) / profile.mass(x), c * c, rtol=1e-14)

    def test_values_at_origin(self) -> None:
        profile = ExponentialProfile(SystemConfig(m0=2.0, c=1.0, V0=3.0))
        assert profile.mass(0.0) == pytest.approx(2.0)
        assert profile.bare_potential(0.0) == pytest.approx(3.0)

    def test_mass_triple_matches_derivatives(self) -> None:
        profile = ExponentialProfile(SystemConfig(c=-2.0))
        x = np.array([-1.0, 0.0, 1.5])
        m, m_d1, m_d2 = profile.mass_triple(x)
        np.testing.assert_allclose(m, profile.mass(x))
        np.testing.assert_allclose(m_d1, profile.mass_d1(x))
        np.testing.assert_allclose(m_d2, profile.mass_d2(x))

    def test_module_functions(self) -> None:
        profile = ExponentialProfile(SystemConfig(c=0.5, V0=4.0))
        x = np.array([0.0, 2.0])
        np.testing.assert_allclose(mass(profile, x), profile.mass(x))
        np.testing.assert_allclose(mass_d1(profile, x), profile.mass_d1(x))
        np.testing.assert_allclose(mass_d2(profile, x), profile.mass_d2(x))
        np.testing.assert_allclose(bare_potential(profile, x), 4.0 * np.exp(0.5 * x))
