"""Test signals: tones, white and pink noise, band-limited program stand-ins."""

from __future__ import annotations

import numpy as np
from scipy import signal as sps

from .errors import InvalidInputError
from .signal import SampledSignal

__all__ = [
    "sine",
    "white_noise",
    "pink_noise",
    "band_noise",
    "bass_like",
    "piano_like",
    "high_pass",
    "normalize_rms",
    "paperize",
]


def _n_samples(duration, rate):
    if duration <= 0 or rate <= 0:
        raise InvalidInputError("duration and sample rate must be positive")
    return int(round(duration * rate))


def sine(freq, duration=1.0, rate=48000.0, amplitude=1.0, phase=0.0):
    if not 0 < freq < rate / 2:
        raise InvalidInputError(f"frequency {freq} Hz must lie strictly between 0 and Nyquist")
    t = np.arange(_n_samples(duration, rate)) / rate
    return SampledSignal(amplitude * np.sin(2 * np.pi * freq * t + phase), rate)


def white_noise(duration=1.0, rate=48000.0, seed=0):
    rng = np.random.default_rng(seed)
    return SampledSignal(rng.standard_normal(_n_samples(duration, rate)), rate)


def pink_noise(duration=1.0, rate=48000.0, seed=0, n_rows=16):
    """Voss-McCartney pink noise.

    Row ``r`` holds a random value that is redrawn every ``2**(r+1)``
    samples, staggered so exactly one row changes per sample; one extra
    white row is redrawn every sample.
    """
    n = _n_samples(duration, rate)
    rng = np.random.default_rng(seed)
    idx = np.arange(n)
    out = rng.standard_normal(n)
    for r in range(n_rows):
        held = rng.standard_normal(((n + (1 << r)) >> (r + 1)) + 1)
        out += held[(idx + (1 << r)) >> (r + 1)]
    return SampledSignal(out / np.sqrt(n_rows + 1), rate)


def band_noise(low, high, duration=1.0, rate=48000.0, seed=0):
    """Gaussian noise with every DFT bin outside ``[low, high]`` Hz zeroed.

    The result is exactly band-limited and periodic over the clip, so its
    transform shows no edge leakage.
    """
    if not 0 < low < high < rate / 2:
        raise InvalidInputError("need 0 < low < high < Nyquist")
    x = white_noise(duration, rate, seed).samples
    X = np.fft.rfft(x)
    f = np.fft.rfftfreq(x.size, 1.0 / rate)
    X[(f < low) | (f > high)] = 0.0
    return SampledSignal(np.fft.irfft(X, x.size), rate)


def bass_like(duration=1.0, rate=48000.0, seed=0):
    """Program stand-in with its power concentrated near 70 Hz."""
    return normalize_rms(band_noise(55.0, 90.0, duration, rate, seed))


def piano_like(duration=1.0, rate=48000.0, seed=0):
    """Program stand-in with its power in 350-1000 Hz."""
    return normalize_rms(band_noise(350.0, 1000.0, duration, rate, seed))


def high_pass(sig: SampledSignal, cutoff, order=8):
    """Zero-phase Butterworth high-pass."""
    if not 0 < cutoff < sig.sample_rate / 2:
        raise InvalidInputError("cutoff must lie strictly between 0 and Nyquist")
    sos = sps.butter(order, cutoff, btype="highpass", fs=sig.sample_rate, output="sos")
    return sig.replace(samples=sps.sosfiltfilt(sos, sig.samples))


def normalize_rms(sig: SampledSignal, rms=0.1):
    """Scale to the given RMS (full-scale units)."""
    cur = np.sqrt(sig.power())
    if cur == 0:
        raise InvalidInputError("cannot normalize a silent signal")
    return sig.replace(samples=sig.samples * (rms / cur))


def paperize(sig: SampledSignal, max_duration=10.0, fade=0.5, depth_db=60.0):
    """Crop to the first ``max_duration`` seconds and apply exponential fades.

    The gain ramps between ``-depth_db`` and 0 dB (linear in dB) over
    ``fade`` seconds at both ends.
    """
    n = min(len(sig), _n_samples(max_duration, sig.sample_rate))
    x = np.array(sig.samples[:n])
    nf = min(_n_samples(fade, sig.sample_rate), n // 2)
    if nf > 0:
        ramp = 10.0 ** (-depth_db * (1.0 - np.arange(nf) / nf) / 20.0)
        x[:nf] *= ramp
        x[n - nf:] *= ramp[::-1]
    return sig.replace(samples=x)
