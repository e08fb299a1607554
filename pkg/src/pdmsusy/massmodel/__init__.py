from .grid import FloatArray, Grid, GridFunction, sample
from .profile import ExponentialProfile, RealLike, bare_potential, mass, mass_d1, mass_d2

__all__ = [
    "ExponentialProfile",
    "Grid",
    "GridFunction",
    "FloatArray",
    "RealLike",
    "sample",
    "mass",
    "mass_d1",
    "mass_d2",
    "bare_potential",
]
