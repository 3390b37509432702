"""Audibility of Monte Carlo noise in rendered sound propagation.

Submodules
----------
signal
    Sampled signals, spectra and the transform convention.
montecarlo
    Synthetic path-traced impulse responses and their error statistics.
spectra
    Static and dynamic (frame-stitched) error spectra.
loudness
    Stationary Zwicker loudness and the relative error-loudness criterion.
job
    Config-driven pipeline behind the command-line tool.
"""

from .errors import InvalidInputError, MetadataError, UnreachableTargetError
from .signal import (
    ComplexSpectrum,
    PowerSpectrum,
    SampledSignal,
    convolve,
    energy_snr,
    forward_dft,
    inverse_dft,
    level_db,
    power_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "InvalidInputError",
    "MetadataError",
    "UnreachableTargetError",
    "ComplexSpectrum",
    "PowerSpectrum",
    "SampledSignal",
    "convolve",
    "energy_snr",
    "forward_dft",
    "inverse_dft",
    "level_db",
    "power_spectrum",
]
