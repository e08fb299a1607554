"""Tests for Sturm counting and bisection."""

import numpy as np
import pytest

from pdmsusy.core.errors import ValidationError
from pdmsusy.massmodel.grid import Grid
from pdmsusy.numerics.sturm import clustered_pairs, eigenvalues, gershgorin_interval, sturm_count
from pdmsusy.numerics.tridiagonal import TridiagonalSystem


def _matrix(diag, offdiag) -> TridiagonalSystem:
    diag = np.asarray(diag, dtype=float)
    return TridiagonalSystem(diag, np.asarray(offdiag, dtype=float), Grid(0.0, 1.0, len(diag)), np.ones(len(diag)))


def _laplacian(n: int) -> TridiagonalSystem:
    return _matrix(np.full(n, 2.0), np.full(n - 1, -1.0))


def _laplacian_eigenvalues(n: int) -> np.ndarray:
    return 2.0 - 2.0 * np.cos(np.arange(1, n + 1) * np.pi / (n + 1))


class TestSturmCount:
    @pytest.mark.parametrize("shift, count", [(0.0, 0), (2.0, 1), (4.0, 2)])
    def test_two_by_two(self, shift: float, count: int) -> None:
        assert sturm_count(_matrix([2.0, 2.0], [1.0]), shift) == count

    def test_vectorized(self) -> None:
        counts = sturm_count(_matrix([2.0, 2.0], [1.0]), [0.0, 2.0, 4.0])
        np.testing.assert_array_equal(counts, [0, 1, 2])

    def test_laplacian(self) -> None:
        n = 40
        exact = _laplacian_eigenvalues(n)
        midpoints = (exact[:-1] + exact[1:]) / 2
        np.testing.assert_array_equal(sturm_count(_laplacian(n), midpoints), np.arange(1, n))

    def test_zero_pivot(self) -> None:
        # T - 2I has a zero leading pivot
        assert sturm_count(_matrix([2.0, 2.0], [1.0]), 2.0) == 1

    def test_random_matrices_against_dense(self) -> None:
        rng = np.random.default_rng(7)
        for _ in range(3):
            system = _matrix(rng.normal(size=30), rng.normal(size=29))
            exact = np.linalg.eigvalsh(system.to_dense())
            shifts = rng.uniform(exact[0] - 1, exact[-1] + 1, size=25)
            expected = np.searchsorted(exact, shifts)
            np.testing.assert_array_equal(sturm_count(system, shifts), expected)


class TestEigenvalues:
    def test_laplacian(self) -> None:
        values = eigenvalues(_laplacian(50), 6, tolerance=1e-13)
        np.testing.assert_allclose(values, _laplacian_eigenvalues(50)[:6], rtol=0, atol=1e-12)

    def test_workers_give_identical_results(self) -> None:
        system = _laplacian(200)
        assert eigenvalues(system, 8, workers=1) == eigenvalues(system, 8, workers=4)

    @pytest.mark.parametrize("k", [0, 51, 2.0, True])
    def test_invalid_k(self, k) -> None:
        with pytest.raises(ValidationError):
            eigenvalues(_laplacian(50), k)

    def test_inside_gershgorin_interval(self) -> None:
        system = _laplacian(20)
        low, high = gershgorin_interval(system)
        assert low == pytest.approx(0.0)
        assert high == pytest.approx(4.0)
        assert all(low <= value <= high for value in eigenvalues(system, 20))


class TestClusteredPairs:
    def test_detects_near_degenerate_neighbours(self) -> None:
        assert clustered_pairs([1.0, 1.0 + 1e-14, 2.0, 3.0]) == [(0, 1)]

    def test_distinct(self) -> None:
        assert clustered_pairs([1.0, 2.0, 3.0]) == []
