from .ground_state import ground_state_closed_form, ground_state_peak, ground_state_phi
from .morse import MorseReduction, morse_branches, morse_reduction, morse_spectrum
from .oscillator import OscillatorMap, oscillator_map, oscillator_spectrum
from .spectrum import Level, Route, Spectrum, kappa

__all__ = [
    "Level",
    "Route",
    "Spectrum",
    "kappa",
    "MorseReduction",
    "morse_reduction",
    "morse_branches",
    "morse_spectrum",
    "OscillatorMap",
    "oscillator_map",
    "oscillator_spectrum",
    "ground_state_closed_form",
    "ground_state_phi",
    "ground_state_peak",
]
