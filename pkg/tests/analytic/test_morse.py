"""Tests for the Morse route to the exact spectrum."""

import pytest

from pdmsusy.analytic.morse import morse_branches, morse_reduction, morse_spectrum
from pdmsusy.analytic.spectrum import Route, kappa
from pdmsusy.core.errors import ComplexOrdering, NoBoundStates, ValidationError
from pdmsusy.core.models import SystemConfig
from pdmsusy.core.ordering import preset


class TestKappa:
    def test_reference_scale(self, reference_system) -> None:
        assert kappa(reference_system) == pytest.approx(1.0)

    def test_formula(self) -> None:
        system = SystemConfig(hbar=0.5, m0=2.0, c=-3.0, V0=9.0)
        assert kappa(system) == pytest.approx(0.5 * 3.0 * (9.0 / 4.0) ** 0.5)

    @pytest.mark.parametrize("V0", [0.0, -1.0])
    def test_no_bound_states(self, V0: float) -> None:
        with pytest.raises(NoBoundStates):
            kappa(SystemConfig(V0=V0))


class TestMorseSpectrum:
    def test_nu_zero_levels(self, reference_system, zhu_kroemer) -> None:
        spectrum = morse_spectrum(reference_system, zhu_kroemer, 3)
        assert spectrum.route is Route.MORSE
        assert spectrum.energies == pytest.approx([1.0, 3.0, 5.0, 7.0])
        assert spectrum.nu == 0.0
        assert len(spectrum) == 4

    def test_bendaniel_duke_levels(self, reference_system, bendaniel_duke) -> None:
        spectrum = morse_spectrum(reference_system, bendaniel_duke, 2)
        assert spectrum.energies == pytest.approx([2.0, 4.0, 6.0])

    def test_sign_of_c_does_not_matter(self, zhu_kroemer) -> None:
        up = morse_spectrum(SystemConfig(c=1.7, V0=3.0), zhu_kroemer, 4)
        down = morse_spectrum(SystemConfig(c=-1.7, V0=3.0), zhu_kroemer, 4)
        assert up.energies == pytest.approx(down.energies, rel=1e-15)

    def test_complex_ordering_is_rejected(self, reference_system) -> None:
        with pytest.raises(ComplexOrdering):
            morse_spectrum(reference_system, preset("gora-williams").params, 3)

    def test_no_bound_states(self, zhu_kroemer) -> None:
        with pytest.raises(NoBoundStates):
            morse_spectrum(SystemConfig(V0=-2.0), zhu_kroemer, 3)

    @pytest.mark.parametrize("n_max", [-1, 1.5, True])
    def test_invalid_level_count(self, reference_system, zhu_kroemer, n_max) -> None:
        with pytest.raises(ValidationError):
            morse_spectrum(reference_system, zhu_kroemer, n_max)


class TestMorseBranches:
    def test_only_plus_root_is_accepted(self, reference_system, bendaniel_duke) -> None:
        branches = morse_branches(reference_system, bendaniel_duke, 2)
        assert len(branches) == 6
        plus = [b for b in branches if b.branch == "+"]
        minus = [b for b in branches if b.branch == "-"]
        assert all(b.valid and b.bracket == 0.5 for b in plus)
        assert not any(b.valid for b in minus)
        assert all(b.bracket == -0.5 for b in minus)

    def test_nu_zero_roots_coincide(self, reference_system, zhu_kroemer) -> None:
        branches = morse_branches(reference_system, zhu_kroemer, 1)
        assert branches[0].energy == branches[1].energy


class TestMorseReduction:
    @pytest.mark.parametrize("name", ["bendaniel-duke", "zhu-kroemer"])
    def test_epsilon_tracks_nu(self, name: str) -> None:
        system = SystemConfig(hbar=1.2, m0=0.6, c=-0.9, V0=1.0)
        reduction = morse_reduction(system, preset(name).params)
        expected = -(system.hbar**2 * system.c**2 * reduction.nu**2) / (8.0 * system.m0)
        assert reduction.epsilon == pytest.approx(expected, abs=1e-15)
        assert reduction.weight_exponent == system.c
