from fractions import Fraction

# Ordering table: (a, alpha, beta, gamma) as exact rationals
PRESET_TABLE: dict[str, tuple[Fraction, Fraction, Fraction, Fraction]] = {
    "bendaniel-duke": (Fraction(0), Fraction(0), Fraction(-1), Fraction(0)),
    "gora-williams": (Fraction(0), Fraction(-1), Fraction(0), Fraction(0)),
    "zhu-kroemer": (Fraction(0), Fraction(-1, 2), Fraction(0), Fraction(-1, 2)),
    "li-kuhn": (Fraction(0), Fraction(0), Fraction(-1, 2), Fraction(-1, 2)),
    "weyl": (Fraction(1), Fraction(0), Fraction(-1), Fraction(0)),
}

PRESET_LABELS: dict[str, str] = {
    "bendaniel-duke": "BenDaniel-Duke, p (1/m) p",
    "gora-williams": "Gora-Williams",
    "zhu-kroemer": "Zhu-Kroemer",
    "li-kuhn": "Li-Kuhn",
    "weyl": "Weyl ordering",
}

# Float tolerance on alpha + beta + gamma = -1
CONSTRAINT_TOLERANCE = 1e-12

# Default units and profile
DEFAULT_HBAR = 1.0
DEFAULT_M0 = 1.0
DEFAULT_C = 1.0
DEFAULT_V0 = 2.0

# Default domain in units of 1/|c|
DEFAULT_X_MIN_SCALED = -40.0
DEFAULT_X_MAX_SCALED = 8.0
DEFAULT_GRID_POINTS = 8192
MIN_GRID_POINTS = 3
MAX_SPACING_TIMES_C = 0.25

# Solver defaults
DEFAULT_RELATIVE_TOLERANCE = 1e-10
CLUSTER_TOLERANCE = 1e-12
MAX_INVERSE_ITERATIONS = 8
INVERSE_ITERATION_TOLERANCE = 1e-13
MAX_SHIFT_RETRIES = 3
SHIFT_NUDGE = 1e-8
DEFAULT_SEED = 12345
BOUNDARY_SENSITIVITY_THRESHOLD = 1e-8
BOUNDARY_SHRINK_FRACTION = 0.1
DOMAIN_TAIL_RATIO = 1e-6

# Output
JSON_SCHEMA_VERSION = 1
DEFAULT_LEVELS = 4
