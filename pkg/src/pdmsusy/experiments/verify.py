"""
Verification suite: one registered check per property of the model and the solver.

A check returns (passed, detail). Checks that cannot run on the requested grid (for
example GridTooCoarse) are reported as "error" and make the suite "degraded".
"""

import logging
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal

import numpy as np
from numpy.typing import NDArray

from ..ambiguity.classification import (
    ambiguity_free_orderings,
    nu_value,
    q_over_c2,
    q_value,
)
from ..ambiguity.potential import (
    effective_potential,
    is_ambiguity_free,
    profile_ambiguity_potential,
)
from ..analytic.ground_state import ground_state_closed_form, ground_state_phi
from ..analytic.morse import morse_reduction, morse_spectrum
from ..analytic.oscillator import oscillator_spectrum
from ..analytic.spectrum import kappa
from ..core.constants import CLUSTER_TOLERANCE, PRESET_TABLE
from ..core.errors import ComplexOrdering, PdmSusyError, ValidationError
from ..core.models import OrderingParams, SystemConfig
from ..core.ordering import make_ordering, ordering_from_free_parameters
from ..massmodel.grid import Grid, GridFunction, sample
from ..massmodel.profile import ExponentialProfile
from ..numerics.refinement import refinement_table, require_resolution, richardson
from ..numerics.solver import NumericSpectrum, SolverOptions, convergence_study, solve_spectrum
from ..numerics.sturm import eigenvalues, gershgorin_interval, sturm_count
from ..numerics.tridiagonal import TridiagonalSystem, assemble, discretize
from ..susy.operators import apply_A, intertwining_defect
from ..susy.partners import identity_residuals, spectral_pairing
from ..susy.superpotential import solve_superpotential
from ..utils.logger import JSONLinesLogger
from .runner import COMPLEX_FLAG, ExperimentRunner

logger = logging.getLogger(__name__)

CheckStatus = Literal["pass", "fail", "error"]
CheckFunction = Callable[["VerificationContext"], tuple[bool, dict[str, Any]]]

# Expected nu^2 of the named orderings
EXPECTED_NU_SQUARED: dict[str, Fraction] = {
    "bendaniel-duke": Fraction(1),
    "gora-williams": Fraction(-1),
    "zhu-kroemer": Fraction(0),
    "li-kuhn": Fraction(0),
    "weyl": Fraction(0),
}
NU0_PRESETS = ("zhu-kroemer", "li-kuhn", "weyl")
BDD = "bendaniel-duke"
GROUND = "zhu-kroemer"

IDENTITY_TOLERANCE = 1e-12
ROUTE_TOLERANCE = 1e-12
NUMERIC_TOLERANCE = 1e-3
PAIRWISE_TOLERANCE = 1e-10
EIGENPAIR_TOLERANCE = 1e-8
NODE_THRESHOLD = 1e-10
ORDER_RANGE = (1.7, 2.3)
BOX_ORDER_RANGE = (1.9, 2.1)
ANNIHILATION_RATIO_RANGE = (3.3, 4.8)
INTERTWINING_POINTS = 399
# one-sided end stencils are first order
EDGE_POINTS = 4
ROUTE_SAMPLES = 100
ROUTE_LEVELS = 10


def reference_system() -> SystemConfig:
    """hbar = m0 = c = 1, V0 = 2, so kappa = 1."""
    return SystemConfig(hbar=1.0, m0=1.0, c=1.0, V0=2.0)


def reference_grid(system: SystemConfig) -> Grid:
    return Grid(-40.0 / system.abs_c, 8.0 / system.abs_c, 8192)


def identity_points(system: SystemConfig) -> NDArray[np.float64]:
    """Moderate domain where max|V| bounds every term of the identities."""
    return np.linspace(-10.0 / system.abs_c, 5.0 / system.abs_c, 1000)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: CheckStatus
    detail: dict[str, Any] = field(default_factory=dict)
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "message": self.message,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SuiteReport:
    results: tuple[CheckResult, ...]

    @property
    def status(self) -> str:
        """"fail" if any check failed, "degraded" if any could not run, else "pass"."""
        if any(r.status == "fail" for r in self.results):
            return "fail"
        if any(r.status == "error" for r in self.results):
            return "degraded"
        return "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def counts(self) -> dict[str, int]:
        return {s: sum(r.status == s for r in self.results) for s in ("pass", "fail", "error")}

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status,
            "counts": self.counts(),
            "checks": [r.to_dict() for r in self.results],
        }


class VerificationContext:
    """Shared inputs of the suite, with numeric spectra cached per preset."""

    def __init__(
        self,
        grid: Grid | None = None,
        levels: int = 4,
        options: SolverOptions | None = None,
        presets: dict[str, tuple[Any, Any, Any, Any]] | None = None,
        system: SystemConfig | None = None,
    ):
        self.system = system or reference_system()
        self.grid = grid or reference_grid(self.system)
        self.levels = levels
        self.options = options or SolverOptions()
        self.presets = dict(PRESET_TABLE if presets is None else presets)
        self._spectra: dict[str, NumericSpectrum] = {}

    def ordering(self, name: str) -> OrderingParams:
        return make_ordering(*self.presets[name])

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.options.seed)

    def real_presets(self) -> list[str]:
        return [name for name in self.presets if nu_value(self.ordering(name)).is_real]

    def numeric(self, name: str) -> NumericSpectrum:
        """levels + 1 numeric levels of a preset, so pairings reach n = levels."""
        if name not in self._spectra:
            self._spectra[name] = solve_spectrum(
                self.system, self.ordering(name), self.grid, self.levels + 1, self.options
            )
        return self._spectra[name]


def _relative(value: float, reference: float) -> float:
    return abs(value - reference) / max(1.0, abs(reference))


def _random_system(rng: np.random.Generator) -> SystemConfig:
    hbar, m0, c, V0 = np.exp(rng.uniform(math.log(0.1), math.log(10.0), size=4))
    sign = 1.0 if rng.random() < 0.5 else -1.0
    return SystemConfig(hbar=float(hbar), m0=float(m0), c=sign * float(c), V0=float(V0))


def _random_real_ordering(rng: np.random.Generator) -> OrderingParams:
    while True:
        a = float(rng.uniform(-0.9, 2.0))
        alpha, gamma = (float(v) for v in rng.uniform(-1.5, 1.0, size=2))
        ordering = ordering_from_free_parameters(a, alpha, gamma)
        if nu_value(ordering).is_real:
            return ordering


def _sign_changes(values: NDArray[np.float64]) -> int:
    significant = values[np.abs(values) > NODE_THRESHOLD * np.max(np.abs(values))]
    return int(np.count_nonzero(np.diff(np.sign(significant)) != 0))


def _weighted_inner(f: GridFunction, g: GridFunction, weight: NDArray[np.float64]) -> float:
    return float(np.sum(weight * f.values * g.values) * f.grid.spacing)


# Ordering algebra


def check_classification(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Exact nu^2 of every named preset."""
    mismatches: dict[str, str] = {}
    for name, expected in EXPECTED_NU_SQUARED.items():
        if name not in ctx.presets:
            mismatches[name] = "missing"
            continue
        try:
            report = nu_value(ctx.ordering(name))
        except ValidationError as e:
            mismatches[name] = str(e)
            continue
        if report.nu_squared != expected:
            mismatches[name] = f"nu^2 = {report.nu_squared}, expected {expected}"
    return not mismatches, {"mismatches": mismatches}


def check_nu_q_consistency(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    worst = 0.0
    exact = True
    for name in ctx.presets:
        ordering = ctx.ordering(name)
        report = nu_value(ordering)
        exact &= report.nu_squared == 1 - 8 * q_over_c2(ordering)
        scaled_q = q_value(ordering, ctx.system) / ctx.system.c**2
        worst = max(worst, abs(scaled_q - float(report.q_over_c2)))
    return exact and worst <= IDENTITY_TOLERANCE, {"exact": exact, "max_q_deviation": worst}


def check_alpha_gamma_symmetry(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Swapping alpha and gamma changes neither q/c^2 nor U."""
    profile = ExponentialProfile(ctx.system)
    x = identity_points(ctx.system)
    failures: list[str] = []
    for name in ctx.presets:
        ordering = ctx.ordering(name)
        swapped = OrderingParams(ordering.a, ordering.gamma, ordering.beta, ordering.alpha)
        same_q = q_over_c2(ordering) == q_over_c2(swapped)
        u = profile_ambiguity_potential(ordering, profile, x)
        u_swapped = profile_ambiguity_potential(swapped, profile, x)
        if not same_q or not np.array_equal(u, u_swapped):
            failures.append(name)
    return not failures, {"asymmetric": failures}


def check_ambiguity_free_families(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    profile = ExponentialProfile(ctx.system)
    x = identity_points(ctx.system)
    failures: list[str] = []
    for a in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(-1, 3), 0.75):
        for ordering in ambiguity_free_orderings(a):
            u = profile_ambiguity_potential(ordering, profile, x)
            if not is_ambiguity_free(ordering) or np.max(np.abs(u)) > 0.0:
                failures.append(",".join(str(v) for v in ordering.as_tuple()))
    bdd_free = is_ambiguity_free(ctx.ordering(BDD)) if BDD in ctx.presets else False
    return not failures and bdd_free, {"failures": failures, "bendaniel_duke_free": bdd_free}


def check_nu0_effective_potential(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Every nu = 0 ordering has U_eff = V exactly on the exponential profile."""
    profile = ExponentialProfile(ctx.system)
    x = identity_points(ctx.system)
    potential = profile.bare_potential(x)
    bound = IDENTITY_TOLERANCE * float(np.max(np.abs(potential)))
    deviations = {
        name: float(np.max(np.abs(effective_potential(ctx.ordering(name), profile, x) - potential)))
        for name in NU0_PRESETS
    }
    passed = all(d < bound for d in deviations.values())
    return passed, {"max_deviation": deviations, "bound": bound}


def check_mass_log_linearity(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    profile = ExponentialProfile(ctx.system)
    x = identity_points(ctx.system)
    m, m_d1, m_d2 = profile.mass_triple(x)
    c = ctx.system.c
    slope = float(np.max(np.abs(np.diff(np.log(m)) / np.diff(x) - c))) / ctx.system.abs_c
    first = float(np.max(np.abs(m_d1 / m - c))) / ctx.system.abs_c
    second = float(np.max(np.abs(m_d2 / m - c**2))) / c**2
    worst = max(first, second)
    return worst <= IDENTITY_TOLERANCE and slope <= 1e-9, {
        "log_slope_deviation": slope,
        "derivative_deviation": worst,
    }


# Analytic spectrum


def check_route_equivalence(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Morse and oscillator routes agree for random systems and real orderings."""
    rng = ctx.rng()
    worst = 0.0
    for _ in range(ROUTE_SAMPLES):
        system = _random_system(rng)
        ordering = _random_real_ordering(rng)
        morse = morse_spectrum(system, ordering, ROUTE_LEVELS - 1).energies
        oscillator = oscillator_spectrum(system, ordering, ROUTE_LEVELS - 1).energies
        worst = max(worst, max(abs(m - o) / abs(m) for m, o in zip(morse, oscillator, strict=True)))
    return worst <= ROUTE_TOLERANCE, {"samples": ROUTE_SAMPLES, "max_relative_deviation": worst}


def check_scale_covariance(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Doubling V0 scales levels by sqrt(2); levels are linear in |c|."""
    ordering = ctx.ordering(BDD)
    n_max = ctx.levels - 1
    base = np.array(morse_spectrum(ctx.system, ordering, n_max).energies)
    cases = {
        "V0_doubled": (ctx.system.scaled(V0=2 * ctx.system.V0), math.sqrt(2.0)),
        "c_doubled": (ctx.system.scaled(c=2 * ctx.system.c), 2.0),
        "c_reversed": (ctx.system.scaled(c=-ctx.system.c), 1.0),
    }
    deviations: dict[str, float] = {}
    for label, (system, factor) in cases.items():
        scaled = np.array(morse_spectrum(system, ordering, n_max).energies)
        deviations[label] = float(np.max(np.abs(scaled / (factor * base) - 1)))
    passed = all(d <= ROUTE_TOLERANCE for d in deviations.values())
    return passed, {"relative_deviation": deviations}


def check_nu_monotonicity(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Levels rise with nu: E_n(nu=1) - E_n(nu=0) = kappa."""
    n_max = ctx.levels - 1
    nu0 = morse_spectrum(ctx.system, ctx.ordering(GROUND), n_max).energies
    nu1 = morse_spectrum(ctx.system, ctx.ordering(BDD), n_max).energies
    k = kappa(ctx.system)
    shifts = [b - a for a, b in zip(nu0, nu1, strict=True)]
    worst = max(_relative(s, k) for s in shifts)
    return worst <= ROUTE_TOLERANCE, {"shifts": shifts, "kappa": k}


def check_epsilon_nu_link(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """nu^2 = -8 m0 eps / (hbar^2 c^2) for every real preset."""
    s = ctx.system
    worst = 0.0
    for name in ctx.real_presets():
        ordering = ctx.ordering(name)
        eps = morse_reduction(s, ordering).epsilon
        predicted = -8.0 * s.m0 * eps / (s.hbar**2 * s.c**2)
        worst = max(worst, _relative(predicted, float(nu_value(ordering).nu_squared)))
    return worst <= ROUTE_TOLERANCE, {"max_deviation": worst}


# Supersymmetry


def check_susy_identities(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """V2 = V and V1 + E0 = V + U_nu0 pointwise."""
    sp = solve_superpotential(ctx.system)
    moderate = identity_residuals(sp, ctx.system, identity_points(ctx.system))
    wide = identity_residuals(sp, ctx.system, ctx.grid.points)
    bound = IDENTITY_TOLERANCE * moderate.max_abs_potential
    passed = (
        moderate.partner_absolute < bound
        and moderate.factorization_absolute < bound
        and wide.partner_relative < IDENTITY_TOLERANCE
        and wide.factorization_relative < IDENTITY_TOLERANCE
    )
    return passed, {"moderate_domain": moderate.to_dict(), "grid": wide.to_dict(), "bound": bound}


def check_factorization_energy(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    sp = solve_superpotential(ctx.system)
    ground = morse_spectrum(ctx.system, ctx.ordering(GROUND), 0).energies[0]
    deviation = _relative(sp.E0, ground)
    detail = {"E0": sp.E0, "ground_level": ground, "deviation": deviation}
    return deviation <= IDENTITY_TOLERANCE, detail


def check_w_minus_independent_of_v0(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    values = {v0: solve_superpotential(ctx.system.scaled(V0=v0)).w_minus for v0 in (0.5, 2.0, 8.0)}
    return len(set(values.values())) == 1, {"w_minus": {str(k): v for k, v in values.items()}}


def check_annihilation_order(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """||A psi0|| shrinks about fourfold per grid halving."""
    require_resolution(ctx.system, ctx.grid)
    sp = solve_superpotential(ctx.system)
    grids = [ctx.grid, ctx.grid.refined(), ctx.grid.refined().refined()]
    residuals = [
        apply_A(ground_state_closed_form(ctx.system, g), ctx.system, sp).norm() for g in grids
    ]
    ratios = [residuals[i] / residuals[i + 1] for i in range(len(residuals) - 1)]
    low, high = ANNIHILATION_RATIO_RANGE
    return all(low <= r <= high for r in ratios), {"residuals": residuals, "ratios": ratios}


def check_intertwining(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """(H2 A - A H1) f on a Gaussian shrinks about fourfold per grid halving."""
    sp = solve_superpotential(ctx.system)
    width = 1.0 / ctx.system.abs_c
    grid = Grid(-6.0 * width, 6.0 * width, INTERTWINING_POINTS)
    defects: list[float] = []

    def gaussian(x: Any) -> Any:
        return np.exp(-((x / width) ** 2))

    for _ in range(3):
        f = sample(gaussian, grid)
        inner = intertwining_defect(f, ctx.system, sp).values[EDGE_POINTS:-EDGE_POINTS]
        defects.append(float(np.max(np.abs(inner))))
        grid = grid.refined()
    ratios = [defects[i] / defects[i + 1] for i in range(len(defects) - 1)]
    low, high = ANNIHILATION_RATIO_RANGE
    return all(low <= r <= high for r in ratios), {"defects": defects, "ratios": ratios}


def check_spectral_pairing(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """E_n(nu=0) - E0 = E_{n-1}(BenDaniel-Duke) within combined error estimates."""
    nu0 = ctx.numeric(GROUND)
    bdd = ctx.numeric(BDD)
    sp = solve_superpotential(ctx.system)
    pairs = spectral_pairing(nu0.energies, bdd.energies, sp.E0)
    failures: list[int] = []
    for n, residual in pairs:
        allowed = nu0.levels[n].error_estimate + (bdd.levels[n - 1].error_estimate if n else 0.0)
        allowed += ctx.options.relative_tolerance * max(1.0, abs(nu0.levels[n].energy))
        if abs(residual) > allowed:
            failures.append(n)
    return not failures, {"residuals": [r for _, r in pairs], "failed_levels": failures}


# Numerics


def check_numeric_vs_analytic(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Numeric levels of every real preset against both analytic routes."""
    deviations: dict[str, float] = {}
    failures: list[str] = []
    for name in ctx.real_presets():
        ordering = ctx.ordering(name)
        numeric = ctx.numeric(name).levels[: ctx.levels]
        morse = morse_spectrum(ctx.system, ordering, ctx.levels - 1).energies
        oscillator = oscillator_spectrum(ctx.system, ordering, ctx.levels - 1).energies
        worst = 0.0
        for level, m, o in zip(numeric, morse, oscillator, strict=True):
            floor = ctx.options.relative_tolerance * max(1.0, abs(m))
            for exact in (m, o):
                error = abs(level.energy - exact)
                worst = max(worst, error / abs(exact))
                if error / abs(exact) >= NUMERIC_TOLERANCE or error > level.error_estimate + floor:
                    failures.append(f"{name}[{level.n}]")
        deviations[name] = worst
    return not failures, {"max_relative_deviation": deviations, "failures": sorted(set(failures))}


def check_nu0_presets_agree(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Equivalent nu = 0 orderings give the same eigenvalues on the same grid."""
    require_resolution(ctx.system, ctx.grid)
    spectra = {
        name: eigenvalues(
            discretize(ctx.system, ctx.ordering(name), ctx.grid, ctx.options.boundary_mode),
            ctx.levels,
            CLUSTER_TOLERANCE,
        )
        for name in NU0_PRESETS
    }
    reference = spectra[NU0_PRESETS[0]]
    spread = max(
        abs(a - b) / max(1.0, abs(b))
        for values in spectra.values()
        for a, b in zip(values, reference, strict=True)
    )
    return spread <= PAIRWISE_TOLERANCE, {"max_pairwise_deviation": spread}


def check_ground_state_match(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    numeric = ctx.numeric(GROUND).wavefunctions_phi[0]
    closed = ground_state_phi(ctx.system, ctx.grid)
    weight = ExponentialProfile(ctx.system).mass(ctx.grid.points)
    discrepancy = (numeric - closed).norm(weight)
    return discrepancy < NUMERIC_TOLERANCE, {"weighted_discrepancy": discrepancy}


def _ground_matrix(ctx: VerificationContext) -> TridiagonalSystem:
    return discretize(ctx.system, ctx.ordering(GROUND), ctx.grid, ctx.options.boundary_mode)


def check_rayleigh_consistency(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    spectrum = ctx.numeric(GROUND)
    matrix = _ground_matrix(ctx)
    deviations = [
        _relative(matrix.weighted_rayleigh_quotient(phi.values), level.coarse_energy)
        for phi, level in zip(spectrum.wavefunctions_phi, spectrum.levels, strict=True)
    ]
    return max(deviations) < EIGENPAIR_TOLERANCE, {"relative_deviation": deviations}


def check_orthogonality(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    phis = ctx.numeric(GROUND).wavefunctions_phi
    weight = ExponentialProfile(ctx.system).mass(ctx.grid.points)
    worst = max(
        (
            abs(_weighted_inner(phis[i], phis[j], weight))
            for i in range(len(phis))
            for j in range(i)
        ),
        default=0.0,
    )
    return worst < EIGENPAIR_TOLERANCE, {"max_overlap": worst}


def check_oscillation_counts(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """The n-th eigenvector has exactly n sign changes."""
    counts = [_sign_changes(phi.values) for phi in ctx.numeric(GROUND).wavefunctions_phi]
    return counts == list(range(len(counts))), {"sign_changes": counts}


def check_convergence_order(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    table = convergence_study(ctx.system, ctx.ordering(GROUND), ctx.grid, 1, ctx.options)
    orders = [level[0] for level in table.orders]
    exact = table.reference[0] if table.reference else math.nan
    coarse, fine = table.rows[0].values[0], table.rows[1].values[0]
    extrapolated, _ = richardson(coarse, fine)
    raw_error = abs(fine - exact)
    gain = raw_error / max(abs(float(extrapolated) - exact), np.finfo(np.float64).tiny)
    low, high = ORDER_RANGE
    passed = all(low <= p <= high for p in orders) and gain >= 4.0
    return passed, {"orders": orders, "richardson_gain": gain, "table": table.to_dict()}


def check_box_self_test(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Constant mass in a unit box: levels hbar^2 pi^2 k^2 / (2 m0 L^2) at second order."""
    hbar, m0, length = 1.0, 1.0, 1.0
    k = ctx.levels
    exact = [(hbar * math.pi * j) ** 2 / (2.0 * m0 * length**2) for j in range(1, k + 1)]

    def build(grid: Grid) -> list[float]:
        box = assemble(grid, np.full(grid.n, m0), np.zeros(grid.n), hbar)
        return eigenvalues(box, k, ctx.options.relative_tolerance)

    fine = build(Grid(0.0, length, 4096))
    accuracy = max(abs(e - x) / x for e, x in zip(fine, exact, strict=True))
    table = refinement_table(build, Grid(0.0, length, 1023), halvings=2, reference=exact)
    orders = [p for level in table.orders for p in level]
    low, high = BOX_ORDER_RANGE
    passed = accuracy < 1e-4 and all(low <= p <= high for p in orders)
    return passed, {"relative_error_n4096": accuracy, "orders": orders}


def characteristic_count(
    diag: NDArray[np.float64], offdiag: NDArray[np.float64], shifts: NDArray[np.float64]
) -> NDArray[np.int64]:
    """Eigenvalues below each shift, from sign changes of the leading principal minors.

    p_k = (d_k - s) p_{k-1} - e_{k-1}^2 p_{k-2}. Each step rescales the pair, which keeps
    the signs. A vanishing minor takes the sign opposite to its predecessor.
    """
    tiny = np.finfo(np.float64).tiny
    previous = np.ones_like(shifts)
    current = diag[0] - shifts
    current = np.where(current == 0.0, -tiny, current)
    changes = (current < 0).astype(np.int64)
    for k in range(1, diag.size):
        following = (diag[k] - shifts) * current - offdiag[k - 1] ** 2 * previous
        replacement = np.where(np.signbit(current), tiny, -tiny)
        following = np.where(following == 0.0, replacement, following)
        changes += np.signbit(following) != np.signbit(current)
        scale = np.maximum(np.abs(current), np.abs(following))
        previous, current = current / scale, following / scale
    return changes


def check_sturm_counts(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Sturm counts agree with the characteristic-polynomial recursion and a dense solve."""
    rng = ctx.rng()
    size = 50
    mismatches = 0
    dense_mismatches = 0
    for _ in range(5):
        grid = Grid(0.0, 1.0, size)
        matrix = TridiagonalSystem(
            diag=rng.standard_normal(size),
            offdiag=rng.standard_normal(size - 1),
            grid=grid,
            weight=np.ones(size),
        )
        low, high = gershgorin_interval(matrix)
        shifts = rng.uniform(low, high, size=50)
        counts = np.asarray(sturm_count(matrix, shifts))
        expected = characteristic_count(matrix.diag, matrix.offdiag, shifts)
        dense = np.searchsorted(np.linalg.eigvalsh(matrix.to_dense()), shifts)
        mismatches += int(np.count_nonzero(counts != expected))
        dense_mismatches += int(np.count_nonzero(expected != dense))
    passed = mismatches == 0 and dense_mismatches == 0
    return passed, {"mismatches": mismatches, "dense_mismatches": dense_mismatches}


def check_domain_monotonicity(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Enlarging the domain at fixed spacing never raises a level beyond its error estimate."""
    spectrum = ctx.numeric(GROUND)
    grid = ctx.grid
    extra = max(1, round(0.25 * (grid.n + 1)))
    margin = extra * grid.spacing
    wider = Grid(grid.x_min - margin, grid.x_max + margin, grid.n + 2 * extra)
    matrix = discretize(ctx.system, ctx.ordering(GROUND), wider, ctx.options.boundary_mode)
    enlarged = eigenvalues(matrix, len(spectrum.levels), ctx.options.relative_tolerance)
    rises = [e - level.coarse_energy for e, level in zip(enlarged, spectrum.levels, strict=True)]
    passed = all(
        rise <= level.error_estimate + ctx.options.relative_tolerance * max(1.0, abs(level.energy))
        for rise, level in zip(rises, spectrum.levels, strict=True)
    )
    return passed, {"rises": rises, "enlarged_grid": wider.to_spec()}


def check_thread_determinism(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    require_resolution(ctx.system, ctx.grid)
    matrix = _ground_matrix(ctx)
    serial = eigenvalues(matrix, ctx.levels, ctx.options.relative_tolerance, workers=1)
    threaded = eigenvalues(matrix, ctx.levels, ctx.options.relative_tolerance, workers=4)
    return serial == threaded, {"serial": serial, "threaded": threaded}


def check_complex_robustness(ctx: VerificationContext) -> tuple[bool, dict[str, Any]]:
    """Complex orderings are rejected everywhere and leave no NaN or Inf behind."""
    rejected: dict[str, bool] = {}
    complex_orderings = [n for n in ctx.presets if not nu_value(ctx.ordering(n)).is_real]
    for name in complex_orderings:
        ordering = ctx.ordering(name)
        for label, call in (
            ("morse", lambda o=ordering: morse_spectrum(ctx.system, o, 0)),
            ("oscillator", lambda o=ordering: oscillator_spectrum(ctx.system, o, 0)),
            ("discretize", lambda o=ordering: discretize(ctx.system, o, ctx.grid)),
        ):
            try:
                call()
                rejected[f"{name}:{label}"] = False
            except ComplexOrdering:
                rejected[f"{name}:{label}"] = True

    # nu^2 = 1 + 2 alpha along this line, so the first two values are complex
    runner = ExperimentRunner(ctx.system, ctx.ordering(BDD))
    alphas = [Fraction(-1), Fraction(-3, 4), Fraction(-1, 2), Fraction(0)]
    rows = runner.sweep("alpha", alphas, ctx.levels)
    numbers = [v for row in rows for v in (row.nu, row.kappa, *row.levels) if v is not None]
    finite = all(math.isfinite(v) for v in numbers)
    complex_rows = [row for row in rows if row.nu_squared is not None and row.nu_squared < 0]
    flagged = bool(complex_rows) and all(
        row.status == COMPLEX_FLAG and not row.levels for row in complex_rows
    )
    passed = all(rejected.values()) and finite and flagged
    statuses = [row.status for row in rows]
    return passed, {"rejected": rejected, "sweep_status": statuses, "finite": finite}


class VerificationSuite:
    """Registry of named checks, run in registration order."""

    _checks: dict[str, CheckFunction] = {
        "classification": check_classification,
        "nu-q-consistency": check_nu_q_consistency,
        "alpha-gamma-symmetry": check_alpha_gamma_symmetry,
        "ambiguity-free-families": check_ambiguity_free_families,
        "nu0-effective-potential": check_nu0_effective_potential,
        "mass-log-linearity": check_mass_log_linearity,
        "route-equivalence": check_route_equivalence,
        "scale-covariance": check_scale_covariance,
        "nu-monotonicity": check_nu_monotonicity,
        "epsilon-nu-link": check_epsilon_nu_link,
        "susy-identities": check_susy_identities,
        "factorization-energy": check_factorization_energy,
        "w-minus-independent-of-v0": check_w_minus_independent_of_v0,
        "annihilation-order": check_annihilation_order,
        "intertwining": check_intertwining,
        "spectral-pairing": check_spectral_pairing,
        "numeric-vs-analytic": check_numeric_vs_analytic,
        "nu0-presets-agree": check_nu0_presets_agree,
        "ground-state-match": check_ground_state_match,
        "rayleigh-consistency": check_rayleigh_consistency,
        "orthogonality": check_orthogonality,
        "oscillation-counts": check_oscillation_counts,
        "convergence-order": check_convergence_order,
        "box-self-test": check_box_self_test,
        "sturm-counts": check_sturm_counts,
        "domain-monotonicity": check_domain_monotonicity,
        "thread-determinism": check_thread_determinism,
        "complex-robustness": check_complex_robustness,
    }

    @classmethod
    def names(cls) -> list[str]:
        return list(cls._checks)

    @classmethod
    def resolve(cls, names: Iterable[str] | None = None) -> list[str]:
        """Validate check names, keeping registration order.

        Raises:
            ValidationError: If a name is not registered
        """
        if names is None:
            return cls.names()
        selected = list(names)
        for name in selected:
            if name not in cls._checks:
                available = ", ".join(cls._checks)
                raise ValidationError(f"Unknown check: '{name}'. Available checks: {available}")
        return [name for name in cls._checks if name in selected]

    @classmethod
    def run_check(cls, name: str, ctx: VerificationContext) -> CheckResult:
        try:
            passed, detail = cls._checks[name](ctx)
        except PdmSusyError as e:
            logger.warning("Check %s could not run: %s", name, e)
            return CheckResult(name, "error", message=f"{type(e).__name__}: {e}")
        return CheckResult(name, "pass" if passed else "fail", detail)

    @classmethod
    def run(
        cls,
        ctx: VerificationContext,
        names: Iterable[str] | None = None,
        logger_: JSONLinesLogger | None = None,
        run_id: str = "verify",
        progress: Callable[[str | None], None] | None = None,
    ) -> SuiteReport:
        results: list[CheckResult] = []
        for name in cls.resolve(names):
            result = cls.run_check(name, ctx)
            results.append(result)
            if logger_:
                detail = {"status": result.status, **result.detail}
                logger_.log_check(run_id, name, result.passed, detail)
            if progress:
                progress(name)
        report = SuiteReport(tuple(results))
        if logger_:
            logger_.log_run_summary(run_id, {"status": report.status, **report.counts()})
        return report
