"""Error-signal power spectra for static and frame-stitched rendering.

Static case: the error of ``f_i * h'`` has energy density
``|F(f_i)|**2 * d`` where ``d`` is the flat IR noise density.

Dynamic case: a renderer re-estimates the IR every frame and overlap-adds
``(f_i * h_k) w(t - k hop)``.  Three estimators are provided:

``dynamic_spectrum_full``
    exact (in expectation) frequency-domain sum over window-shift terms;
``dynamic_spectrum_narrowband``
    only the zero-shift term, a convolution with ``|F(w)|**2``;
``dynamic_spectrum_delta``
    the window spectrum replaced by an impulse; it misses the leakage of
    energy into low frequencies and is kept for comparison.

:func:`stitch_dynamic_noise` is a time-domain simulation of the same process
used to validate them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import get_window

from .errors import InvalidInputError
from .signal import ComplexSpectrum, PowerSpectrum, SampledSignal

__all__ = [
    "WINDOW_SHAPES",
    "WindowSpec",
    "DynamicRenderConfig",
    "window_values",
    "window_energy",
    "window_partition",
    "window_energy_spectrum",
    "analysis_length",
    "static_error_spectrum",
    "noise_density_from_snr",
    "stitch_dynamic_noise",
    "frame_assignment",
    "dynamic_spectrum_full",
    "dynamic_spectrum_narrowband",
    "dynamic_spectrum_delta",
    "quantization_floor",
    "quantization_spectrum",
    "dithered_quantize",
    "fractional_octave_average",
]

WINDOW_SHAPES = ("hanning", "triangular", "rectangular")
_SHAPE_ALIASES = {"hann": "hanning", "hanning": "hanning", "tri": "triangular",
                  "triangular": "triangular", "rect": "rectangular", "rectangular": "rectangular"}

#: Relative size below which a window-shift term of the full estimator is dropped.
SHIFT_TRUNCATION = 1e-6


@dataclass(frozen=True)
class WindowSpec:
    """Frame interpolation window: ``shape``, ``length`` and ``hop`` in samples."""

    shape: str = "hanning"
    length: int = 512
    hop: int = 256

    def __post_init__(self):
        shape = _SHAPE_ALIASES.get(str(self.shape).lower())
        if shape is None:
            raise InvalidInputError(f"unknown window shape {self.shape!r}; expected one of {WINDOW_SHAPES}")
        object.__setattr__(self, "shape", shape)
        if not (0 < self.hop <= self.length):
            raise InvalidInputError(f"need 0 < hop <= length, got hop={self.hop}, length={self.length}")

    def hop_seconds(self, rate: float) -> float:
        return self.hop / rate


@dataclass(frozen=True)
class DynamicRenderConfig:
    window: WindowSpec = WindowSpec()
    quantization_interval: float = 0.0

    def __post_init__(self):
        if self.quantization_interval < 0:
            raise InvalidInputError("quantization interval must be nonnegative")


def window_values(spec: WindowSpec) -> np.ndarray:
    """Periodic window samples in ``[0, 1]``."""
    n = spec.length
    if spec.shape == "hanning":
        return get_window("hann", n, fftbins=True)
    if spec.shape == "triangular":
        half = n / 2.0
        return 1.0 - np.abs(np.arange(n) - half) / half
    return np.ones(n)


def window_energy(spec: WindowSpec, rate: float) -> float:
    """``integral w(t)**2 dt`` in seconds."""
    w = window_values(spec)
    return float(np.dot(w, w) / rate)


def window_partition(spec: WindowSpec, tol: float = 1e-6):
    """Return ``(is_constant, value)`` for ``sum_k w(t - k hop)``."""
    w = window_values(spec)
    acc = np.zeros(spec.hop)
    for start in range(0, spec.length, spec.hop):
        seg = w[start : start + spec.hop]
        acc[: seg.size] += seg
    value = float(acc.mean())
    return bool(np.max(np.abs(acc - value)) <= tol * max(abs(value), 1.0)), value


def window_energy_spectrum(spec: WindowSpec, rate: float, n: int | None = None) -> PowerSpectrum:
    """``|F(w)|**2`` on an ``n``-point grid (default: the window length)."""
    n = spec.length if n is None else int(n)
    if n < spec.length:
        raise InvalidInputError("grid shorter than the window")
    W = np.fft.fft(window_values(spec), n) / rate
    return PowerSpectrum(np.abs(W) ** 2, rate, energy=True)


def analysis_length(n_input: int, n_ir: int, hop: int) -> int:
    """Transform length covering the linear convolution, rounded up to a hop multiple."""
    n = n_input + n_ir - 1
    return int(-(-n // hop) * hop)


def static_error_spectrum(input_spectrum: ComplexSpectrum, density: float) -> PowerSpectrum:
    """``|F(f_i)|**2 * density`` (energy density; divide by clip duration for power)."""
    if density < 0:
        raise InvalidInputError("noise density must be nonnegative")
    return PowerSpectrum(input_spectrum.magnitude_squared() * density, input_spectrum.sample_rate, energy=True)


def noise_density_from_snr(ir: SampledSignal, snr: float) -> float:
    """IR noise density implied by an energy SNR: ``integral |F(h)|^2 / (s * snr)``."""
    if not snr > 0:
        raise InvalidInputError("snr must be positive")
    if np.isinf(snr):
        return 0.0
    return ir.energy() / (ir.sample_rate * snr)


# ---------------------------------------------------------------------------
# Time-domain stitching
# ---------------------------------------------------------------------------

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def frame_assignment(frames, n_choices: int, seed: int = 0) -> np.ndarray:
    """IR index for each frame, a hash of ``(seed, frame index)`` alone."""
    frames = np.asarray(frames, dtype=np.int64)
    with np.errstate(over="ignore"):
        z = frames.view(np.uint64) + np.uint64(seed & 0xFFFFFFFFFFFFFFFF) * _GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        z = z ^ (z >> np.uint64(31))
    return (z % np.uint64(n_choices)).astype(np.int64)


def _as_matrix(irs, rate):
    if isinstance(irs, np.ndarray):
        mat = np.atleast_2d(np.asarray(irs, dtype=float))
    else:
        irs = list(irs)
        if not irs:
            raise InvalidInputError("error IR list must be nonempty")
        lengths = {len(h) for h in irs}
        if len(lengths) != 1:
            raise InvalidInputError("error IRs must share one length")
        if any(h.sample_rate != rate for h in irs):
            raise InvalidInputError("error IR sample rate differs from the input")
        mat = np.stack([h.samples for h in irs])
    if mat.shape[0] == 0:
        raise InvalidInputError("error IR list must be nonempty")
    return mat


def dithered_quantize(x, q: float, rng: np.random.Generator) -> np.ndarray:
    """Round to a ``q`` grid after adding uniform dither of one step width.

    Each call adds error of variance ``q**2/6`` on average over signals
    spread across the grid (``q**2/12`` dither plus ``q**2/12`` rounding).
    """
    x = np.asarray(x, dtype=float)
    d = rng.uniform(-0.5 * q, 0.5 * q, size=x.shape)
    return q * np.rint((x + d) / q)


def stitch_dynamic_noise(
    input: SampledSignal,
    error_irs,
    spec: WindowSpec,
    quantization: float = 0.0,
    seed: int = 0,
    reference_ir: SampledSignal | None = None,
) -> SampledSignal:
    """Simulate the error of a frame-stitched renderer.

    Frame ``k`` convolves the input with an error IR picked (with
    replacement) by :func:`frame_assignment` and is weighted by
    ``w(t - k hop)``.  Output length is ``len(input) + len(ir) - 1``.

    With ``quantization > 0`` the noise is ``Q(f_o + f_e) - Q(f_o)``: the
    difference between the dithered 16-bit-style quantizations of the noisy
    and the clean output (``f_o`` is the input convolved with
    ``reference_ir``, or zero when none is given).  The two independent
    ``q**2/6`` rounding errors give the ``q**2/3`` floor modelled by
    :func:`quantization_floor`.
    """
    ok, _ = window_partition(spec)
    if not ok:
        raise InvalidInputError(
            f"{spec.shape} window of length {spec.length} with hop {spec.hop} does not "
            "partition unity: sum_k w(t - k*hop) must be constant"
        )
    if quantization < 0:
        raise InvalidInputError("quantization interval must be nonnegative")
    rate = input.sample_rate
    mat = _as_matrix(error_irs, rate)
    n_in, n_ir = len(input), mat.shape[1]
    n_out = n_in + n_ir - 1
    nfft = 1 << int(np.ceil(np.log2(n_out)))
    w = window_values(spec)
    hop, wl = spec.hop, spec.length

    first = -((wl - 1) // hop)
    last = (n_out - 1) // hop
    frames = np.arange(first, last + 1)
    choice = frame_assignment(frames, mat.shape[0], seed)

    X = np.fft.rfft(input.samples, nfft)
    out = np.zeros(n_out)
    for j in np.unique(choice):
        mask = np.zeros(n_out + 2 * wl)
        for k in frames[choice == j]:
            start = k * hop + wl
            mask[start : start + wl] += w
        mask = mask[wl : wl + n_out]
        if not np.any(mat[j]):
            continue
        g = np.fft.irfft(X * np.fft.rfft(mat[j], nfft), nfft)[:n_out] / rate
        out += g * mask

    if quantization > 0:
        rng = np.random.default_rng([seed, 0x9A])
        if reference_ir is not None:
            h = np.pad(reference_ir.samples, (0, max(0, n_ir - len(reference_ir))))[:n_ir]
            clean = np.fft.irfft(X * np.fft.rfft(h, nfft), nfft)[:n_out] / rate
        else:
            clean = np.zeros(n_out)
        out = dithered_quantize(clean + out, quantization, rng) - dithered_quantize(clean, quantization, rng)
    return SampledSignal(out, rate)


# ---------------------------------------------------------------------------
# Analytic dynamic estimators
# ---------------------------------------------------------------------------


def _check_hop_grid(n: int, spec: WindowSpec):
    if n % spec.hop:
        raise InvalidInputError(
            f"spectrum length {n} must be a multiple of the hop {spec.hop}; see analysis_length()"
        )
    if n < spec.length:
        raise InvalidInputError("spectrum grid shorter than the window")


def _circular_convolve(a, b):
    return np.fft.ifft(np.fft.fft(a) * np.fft.fft(b))


def shift_kernel(variance_envelope, spec: WindowSpec, rate: float, k_max: int) -> np.ndarray:
    """Coefficients ``F(var)(-k/dt_w) / (s dt_w)`` for ``k = -k_max .. k_max``.

    The transform is evaluated at multiples of ``s/hop``, so it only needs
    the envelope folded modulo ``hop``.
    """
    var = np.asarray(variance_envelope, dtype=float)
    folded = np.bincount(np.arange(var.size) % spec.hop, weights=var, minlength=spec.hop)
    k = np.arange(-k_max, k_max + 1)
    phase = np.exp(2j * np.pi * np.outer(k, np.arange(spec.hop)) / spec.hop)
    return phase @ folded / (spec.hop * rate)


def dynamic_spectrum_full(
    input_spectrum: ComplexSpectrum,
    variance_envelope,
    spec: WindowSpec,
    truncation: float = SHIFT_TRUNCATION,
    k_max: int | None = None,
) -> PowerSpectrum:
    """Expected energy density of the stitched error, all window-shift terms.

    Term ``k`` couples input bins ``x`` and ``x + k s/hop`` through the
    covariance ``F(f_i)(x) conj(F(f_i)(x + k/dt_w)) F(var)(-k/dt_w) / s``
    and the window pair ``F(w)(w - x) conj(F(w)(w - x - k/dt_w))``.  The sum
    stops at the first ``|k|`` whose kernel magnitude times window-pair
    overlap falls below ``truncation`` of the ``k = 0`` term, unless
    ``k_max`` is given.

    ``input_spectrum`` must live on a grid whose length is a multiple of the
    hop and covers the linear convolution (:func:`analysis_length`).
    """
    rate = input_spectrum.sample_rate
    n = len(input_spectrum)
    _check_hop_grid(n, spec)
    var = np.asarray(variance_envelope, dtype=float)
    if var.size > n:
        raise InvalidInputError("variance envelope longer than the spectrum grid")
    m = n // spec.hop
    cap = spec.hop // 2
    Fi = input_spectrum.bins
    W = np.fft.fft(window_values(spec), n) / rate
    dx = rate / n

    if k_max is None:
        kern = shift_kernel(var, spec, rate, cap)
        ref = abs(kern[cap]) * np.sum(np.abs(W) ** 2)
        k_max = 0
        for k in range(1, cap + 1):
            overlap = np.sum(np.abs(W * np.conj(np.roll(W, k * m))))
            if max(abs(kern[cap + k]), abs(kern[cap - k])) * overlap < truncation * ref:
                break
            k_max = k
    kern = shift_kernel(var, spec, rate, k_max)

    total = np.zeros(n, dtype=complex)
    for idx, k in enumerate(range(-k_max, k_max + 1)):
        q = Fi * np.conj(np.roll(Fi, -k * m))
        v = W * np.conj(np.roll(W, k * m))
        total += kern[idx] * _circular_convolve(q, v)
    values = np.maximum(total.real * dx, 0.0)
    return PowerSpectrum(values, rate, energy=True)


def _window_grid_spectrum(static_spectrum: PowerSpectrum, spec: WindowSpec, window_spectrum):
    if window_spectrum is None:
        return window_energy_spectrum(spec, static_spectrum.sample_rate, len(static_spectrum))
    if not window_spectrum.same_grid(static_spectrum):
        raise InvalidInputError(
            f"window spectrum grid ({len(window_spectrum)} bins @ {window_spectrum.sample_rate} Hz) "
            f"does not match the error spectrum ({len(static_spectrum)} bins @ {static_spectrum.sample_rate} Hz)"
        )
    return window_spectrum


def dynamic_spectrum_narrowband(
    static_spectrum: PowerSpectrum, spec: WindowSpec, window_spectrum: PowerSpectrum | None = None
) -> PowerSpectrum:
    """``(S_static (*) |F(w)|**2) / dt_w`` with circular convolution on the grid."""
    if len(static_spectrum) < spec.length:
        raise InvalidInputError("spectrum grid shorter than the window")
    rate = static_spectrum.sample_rate
    ws = _window_grid_spectrum(static_spectrum, spec, window_spectrum)
    conv = _circular_convolve(static_spectrum.values, ws.values).real * static_spectrum.bin_width
    values = np.maximum(conv, 0.0) / spec.hop_seconds(rate)
    return static_spectrum.with_values(values)


def dynamic_spectrum_delta(static_spectrum: PowerSpectrum, spec: WindowSpec) -> PowerSpectrum:
    """``S_static * integral(w**2) / dt_w`` pointwise."""
    rate = static_spectrum.sample_rate
    factor = window_energy(spec, rate) / spec.hop_seconds(rate)
    return static_spectrum.with_values(static_spectrum.values * factor)


# ---------------------------------------------------------------------------
# Quantization
# ---------------------------------------------------------------------------


def quantization_floor(q: float) -> float:
    """Additive error power ``q**2/3`` of output quantization with interval ``q``.

    The classical single-rounding value is ``q**2/12``; ``q**2/3`` matches the
    difference of two dithered quantizations (see :func:`stitch_dynamic_noise`).
    """
    if q < 0:
        raise InvalidInputError("quantization interval must be nonnegative")
    return q * q / 3.0


def quantization_spectrum(q: float, like: PowerSpectrum, duration: float | None = None) -> PowerSpectrum:
    """Flat density carrying ``q**2/3`` of power over ``[-s/2, s/2)`` on ``like``'s grid.

    Energy-tagged grids need ``duration`` (the clip length) to convert power to energy.
    """
    density = quantization_floor(q) / like.sample_rate
    if like.energy:
        if duration is None:
            raise InvalidInputError("energy-density grids need the clip duration")
        density *= duration
    return like.with_values(np.full(len(like), density))


def fractional_octave_average(freqs, values, fraction: int = 3, fmin: float = 20.0, fmax: float = 20000.0):
    """Average ``values`` in 1/``fraction``-octave bands centred on ``1000 * 2**(k/fraction)``.

    Returns ``(centres, means)``; bands containing no bins are dropped.
    """
    freqs = np.asarray(freqs, dtype=float)
    values = np.asarray(values, dtype=float)
    k_lo = int(np.ceil(fraction * np.log2(fmin / 1000.0)))
    k_hi = int(np.floor(fraction * np.log2(fmax / 1000.0)))
    centres, means = [], []
    for k in range(k_lo, k_hi + 1):
        fc = 1000.0 * 2.0 ** (k / fraction)
        lo, hi = fc * 2.0 ** (-0.5 / fraction), fc * 2.0 ** (0.5 / fraction)
        sel = (freqs >= lo) & (freqs < hi)
        if np.any(sel):
            centres.append(fc)
            means.append(values[sel].mean())
    return np.array(centres), np.array(means)
