"""Sampled signals, spectra and the discrete Fourier convention used throughout.

All transforms follow the sample-rate-scaled convention

    F(f)(w_k) = sum_t (1/s) f(t/s) exp(-2 pi i w_k t / s),   w_k = k s / N,

so a fast-transform result is converted with a single constant:
``F = numpy.fft.fft(x) / s``.  Under this scaling Parseval reads
``sum(x**2) / s == sum(|F|**2) * (s / N)``.

Spectra are stored two-sided (``N`` bins, ``k = 0 .. N-1``).  Reporting
helpers produce the one-sided form with the doubling applied.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .errors import InvalidInputError

__all__ = [
    "SampledSignal",
    "ComplexSpectrum",
    "PowerSpectrum",
    "forward_dft",
    "inverse_dft",
    "power_spectrum",
    "level_db",
    "energy_snr",
    "convolve",
    "NEG_INF_DB",
    "P_REF_PA",
]

#: Sentinel returned by :func:`level_db` for zero power.
NEG_INF_DB = float("-inf")

#: Reference RMS pressure for dB SPL.
P_REF_PA = 2e-5


def _frozen(values, dtype=float):
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled real waveform.

    Parameters
    ----------
    samples : array_like
        Real amplitudes, full scale +-1 unless stated otherwise.
    sample_rate : float
        Sampling rate in Hz.
    calibration_db : float, optional
        dB SPL corresponding to unit (full-scale) power.
    """

    samples: np.ndarray
    sample_rate: float
    calibration_db: float | None = None

    def __post_init__(self):
        samples = _frozen(self.samples)
        if samples.ndim != 1:
            raise InvalidInputError("samples must be one-dimensional")
        if samples.size == 0:
            raise InvalidInputError("signal must contain at least one sample")
        if not np.all(np.isfinite(samples)):
            raise InvalidInputError("samples must be finite")
        if not (self.sample_rate > 0 and np.isfinite(self.sample_rate)):
            raise InvalidInputError(f"sample_rate must be positive, got {self.sample_rate!r}")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", float(self.sample_rate))

    def __len__(self):
        return self.samples.size

    @property
    def duration(self) -> float:
        return self.samples.size / self.sample_rate

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.samples.size) / self.sample_rate

    def energy(self) -> float:
        """Sum of squared samples divided by the sample rate (continuous-time energy)."""
        return float(np.dot(self.samples, self.samples) / self.sample_rate)

    def power(self) -> float:
        return float(np.mean(self.samples**2))

    def replace(self, samples=None, calibration_db=...):
        cal = self.calibration_db if calibration_db is ... else calibration_db
        return SampledSignal(self.samples if samples is None else samples, self.sample_rate, cal)

    def padded(self, length: int) -> "SampledSignal":
        """Zero-pad (never truncate) to ``length`` samples."""
        if length < len(self):
            raise InvalidInputError(f"cannot pad {len(self)} samples down to {length}")
        return self.replace(np.pad(self.samples, (0, length - len(self))))


@dataclass(frozen=True)
class ComplexSpectrum:
    """Two-sided transform of a real signal on the grid ``k * s / N``."""

    bins: np.ndarray
    sample_rate: float

    def __post_init__(self):
        object.__setattr__(self, "bins", _frozen(self.bins, complex))
        object.__setattr__(self, "sample_rate", float(self.sample_rate))

    def __len__(self):
        return self.bins.size

    @property
    def bin_width(self) -> float:
        return self.sample_rate / self.bins.size

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(self.bins.size) * self.bin_width

    def energy(self) -> float:
        """Integral of ``|F|**2`` over one period of the frequency axis."""
        return float(np.sum(np.abs(self.bins) ** 2) * self.bin_width)

    def magnitude_squared(self) -> np.ndarray:
        return np.abs(self.bins) ** 2


@dataclass(frozen=True)
class PowerSpectrum:
    """Nonnegative two-sided density on the grid ``k * s / N``.

    Parameters
    ----------
    values : array_like
        Power per Hz, or energy per Hz when ``energy`` is true.
    sample_rate : float
    duration : float, optional
        The divisor ``T`` that turned an energy density into this power
        density.  ``None`` for energy densities.
    energy : bool
        Tag for energy-density spectra.
    calibration_db : float, optional
        dB SPL corresponding to unit power.
    """

    values: np.ndarray
    sample_rate: float
    duration: float | None = None
    energy: bool = False
    calibration_db: float | None = None

    def __post_init__(self):
        values = _frozen(self.values)
        if values.ndim != 1 or values.size == 0:
            raise InvalidInputError("spectrum values must be a nonempty 1-D array")
        if np.any(values < 0) or not np.all(np.isfinite(values)):
            raise InvalidInputError("spectrum values must be finite and nonnegative")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "sample_rate", float(self.sample_rate))

    def __len__(self):
        return self.values.size

    @property
    def bin_width(self) -> float:
        return self.sample_rate / self.values.size

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(self.values.size) * self.bin_width

    def total(self) -> float:
        """Integral over ``[-s/2, s/2)``."""
        return float(np.sum(self.values) * self.bin_width)

    def one_sided(self):
        """Return ``(freqs, values)`` for ``k = 0 .. N//2`` with interior bins doubled."""
        n = self.values.size
        half = n // 2
        vals = self.values[: half + 1].copy()
        if n % 2 == 0:
            vals[1:half] *= 2.0
        else:
            vals[1:] *= 2.0
        return self.frequencies[: half + 1], vals

    def with_values(self, values, **changes) -> "PowerSpectrum":
        kw = dict(
            sample_rate=self.sample_rate,
            duration=self.duration,
            energy=self.energy,
            calibration_db=self.calibration_db,
        )
        kw.update(changes)
        return PowerSpectrum(values, **kw)

    def as_power(self, duration: float) -> "PowerSpectrum":
        """Divide an energy density by ``duration`` seconds."""
        if not self.energy:
            raise InvalidInputError("spectrum is already a power density")
        if duration <= 0:
            raise InvalidInputError("duration must be positive")
        return self.with_values(self.values / duration, duration=float(duration), energy=False)

    def calibrated(self, calibration_db: float) -> "PowerSpectrum":
        return self.with_values(self.values, calibration_db=float(calibration_db))

    def same_grid(self, other: "PowerSpectrum") -> bool:
        return self.values.size == other.values.size and np.isclose(
            self.sample_rate, other.sample_rate
        )


def forward_dft(signal: SampledSignal, n: int | None = None) -> ComplexSpectrum:
    """Transform under the sample-rate-scaled convention.

    ``n`` zero-pads the signal before transforming.
    """
    if n is not None and n < len(signal):
        raise InvalidInputError("transform length shorter than the signal")
    bins = np.fft.fft(signal.samples, n=n) / signal.sample_rate
    return ComplexSpectrum(bins, signal.sample_rate)


def inverse_dft(spectrum: ComplexSpectrum, calibration_db=None) -> SampledSignal:
    samples = np.fft.ifft(spectrum.bins * spectrum.sample_rate).real
    return SampledSignal(samples, spectrum.sample_rate, calibration_db)


def power_spectrum(signal: SampledSignal, duration: float | None = None, n: int | None = None):
    """``|F(f)|**2 / T`` with ``T`` the signal duration unless overridden."""
    T = signal.duration if duration is None else float(duration)
    if T <= 0:
        raise InvalidInputError("duration must be positive")
    spec = forward_dft(signal, n)
    return PowerSpectrum(
        spec.magnitude_squared() / T,
        signal.sample_rate,
        duration=T,
        calibration_db=signal.calibration_db,
    )


def level_db(p, p_ref=1.0):
    """``10 log10(p / p_ref)``; zero power maps to ``NEG_INF_DB``.

    For pressures, pass squared RMS values (``p_ref = P_REF_PA**2`` for SPL).
    """
    p_arr = np.asarray(p, dtype=float)
    if np.any(p_arr < 0):
        raise InvalidInputError("power must be nonnegative")
    if not p_ref > 0:
        raise InvalidInputError("reference power must be positive")
    with np.errstate(divide="ignore"):
        out = 10.0 * np.log10(p_arr / p_ref)
    return float(out) if out.ndim == 0 else out


def energy_snr(reference: SampledSignal, errors) -> float:
    """Energy SNR with the expected error energy estimated by the ensemble mean."""
    errors = list(errors)
    if not errors:
        raise InvalidInputError("at least one error realization is required")
    ref = reference.samples
    err_energy = []
    for e in errors:
        if len(e) != len(ref) or e.sample_rate != reference.sample_rate:
            raise InvalidInputError("error realizations must match the reference length and rate")
        err_energy.append(np.dot(e.samples, e.samples))
    return float(np.dot(ref, ref) / np.mean(err_energy))


def convolve(input: SampledSignal, ir: SampledSignal) -> SampledSignal:
    """Full linear convolution, scaled so its transform is the product of transforms.

    With the ``1/s`` convention the time-domain result is ``(x * h) / s``:
    an impulse of height ``s`` is the identity kernel.
    """
    if input.sample_rate != ir.sample_rate:
        raise InvalidInputError(
            f"sample rates differ: {input.sample_rate} vs {ir.sample_rate}"
        )
    out = fftconvolve(input.samples, ir.samples) / input.sample_rate
    return SampledSignal(out, input.sample_rate, input.calibration_db)
