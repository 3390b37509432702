"""Synthetic Monte Carlo impulse responses and their error statistics.

A :class:`RoomModel` is a stochastic echo model standing in for a geometric
path tracer.  Each path deposits one impulse into the nearest sample bin, so
per-sample errors are independent by construction.

Amplitude convention
--------------------
In memory, IR samples are continuous-time amplitudes: a discrete gain ``g``
at one sample is stored as ``g * s``, which makes :func:`propnoise.signal.convolve`
and the sample-rate-scaled transform consistent.  On disk (WAV files) IRs are
stored as discrete gains, the layout other tools produce.
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidInputError, MetadataError
from .signal import PowerSpectrum, SampledSignal
from . import wavio

__all__ = [
    "DirectPath",
    "RoomModel",
    "IrEnsemble",
    "sample_ir",
    "expected_ir",
    "build_ensemble",
    "noise_density",
    "empirical_error_spectrum",
    "save_ensemble",
    "load_ensemble",
    "MIN_SPECTRUM_REALIZATIONS",
]

MIN_SPECTRUM_REALIZATIONS = 50

# Offset mixed into the room seed for the fixed per-bin sign pattern, so it
# never coincides with a path-sampling stream.
_SIGN_STREAM = 0x5167


@dataclass(frozen=True)
class DirectPath:
    delay: float
    amplitude: float


@dataclass(frozen=True)
class RoomModel:
    """Stochastic echo model.

    Parameters
    ----------
    sample_rate : float
    ir_duration : float
        IR length in seconds.
    direct : DirectPath or None
        Deterministic direct contribution (discrete gain at ``delay``).
    arrival_density_growth : float
        ``g`` in the arrival density ``(1 + g t**2)`` (1/s^2).
    decay_time : float
        Energy decay constant of the reflections; amplitudes decay with
        twice this constant.
    reflection_gain : float
        Expected reflection amplitude (discrete gain) at ``t = 0`` for a
        uniform arrival density.  Zero gives a direct-only room.
    onset : float or None
        Earliest reflection arrival; defaults to the direct delay, or 0.
    seed : int
        Fixes the per-bin reflection sign pattern and the default path seeds.
    """

    sample_rate: float = 48000.0
    ir_duration: float = 0.5
    direct: DirectPath | None = DirectPath(0.005, 1.0)
    arrival_density_growth: float = 1000.0
    decay_time: float = 0.08
    reflection_gain: float = 0.05
    onset: float | None = None
    seed: int = 0

    def __post_init__(self):
        if not self.sample_rate > 0:
            raise InvalidInputError("sample_rate must be positive")
        if not self.ir_duration > 0:
            raise InvalidInputError("ir_duration must be positive")
        if not self.decay_time > 0:
            raise InvalidInputError("decay_time must be positive")
        if self.arrival_density_growth < 0:
            raise InvalidInputError("arrival_density_growth must be nonnegative")
        if not np.isfinite(self.reflection_gain):
            raise InvalidInputError("reflection_gain must be finite")
        if self.direct is not None:
            if not np.isfinite(self.direct.amplitude):
                raise InvalidInputError("direct amplitude must be finite")
            if not 0 <= self.direct.delay < self.ir_duration:
                raise InvalidInputError("direct delay must lie inside the IR")
        if not 0 <= self.arrival_start < self.ir_duration:
            raise InvalidInputError("reflection onset must lie inside the IR")

    @property
    def n_samples(self) -> int:
        return int(round(self.ir_duration * self.sample_rate))

    @property
    def arrival_start(self) -> float:
        if self.onset is not None:
            return float(self.onset)
        return self.direct.delay if self.direct is not None else 0.0

    @property
    def amplitude_decay(self) -> float:
        return 2.0 * self.decay_time

    def sign_pattern(self) -> np.ndarray:
        """Fixed +-1 per sample bin, the 'fine structure' of the expected IR."""
        rng = np.random.default_rng([self.seed, _SIGN_STREAM])
        return rng.choice(np.array([-1.0, 1.0]), size=self.n_samples)

    def arrival_density(self, t) -> np.ndarray:
        """Normalized arrival probability density on ``[onset, ir_duration]``."""
        t = np.asarray(t, dtype=float)
        t0, t1, g = self.arrival_start, self.ir_duration, self.arrival_density_growth
        z = (t1 - t0) + g * (t1**3 - t0**3) / 3.0
        inside = (t >= t0) & (t <= t1)
        return np.where(inside, (1.0 + g * t**2) / z, 0.0)

    def to_metadata(self) -> dict:
        d = asdict(self)
        direct = d.pop("direct")
        out = {f"room.{k}": v for k, v in d.items() if v is not None}
        if direct is not None:
            out["room.direct_delay"] = direct["delay"]
            out["room.direct_amplitude"] = direct["amplitude"]
        return out

    @classmethod
    def from_metadata(cls, meta: dict) -> "RoomModel | None":
        keys = {k[5:]: v for k, v in meta.items() if k.startswith("room.")}
        if not keys:
            return None
        direct = None
        if "direct_delay" in keys:
            direct = DirectPath(float(keys.pop("direct_delay")), float(keys.pop("direct_amplitude", 1.0)))
        kw = {}
        for name, conv in [
            ("sample_rate", float),
            ("ir_duration", float),
            ("arrival_density_growth", float),
            ("decay_time", float),
            ("reflection_gain", float),
            ("onset", float),
            ("seed", int),
        ]:
            if name in keys:
                kw[name] = conv(keys[name])
        return cls(direct=direct, **kw)


def _sample_arrivals(room: RoomModel, n: int, rng: np.random.Generator) -> np.ndarray:
    # Mixture of the uniform and t**2 parts of (1 + g t^2), each inverted exactly.
    t0, t1, g = room.arrival_start, room.ir_duration, room.arrival_density_growth
    w_uniform = t1 - t0
    w_square = g * (t1**3 - t0**3) / 3.0
    u = rng.random(n)
    pick_square = rng.random(n) < w_square / (w_uniform + w_square)
    t = t0 + u * (t1 - t0)
    cube = np.cbrt(t0**3 + u * (t1**3 - t0**3))
    return np.where(pick_square, cube, t)


def _path_scale(room: RoomModel) -> float:
    # Makes the expected envelope equal reflection_gain * exp(-t/tau_a) for g = 0.
    return room.reflection_gain * (room.ir_duration - room.arrival_start) * room.sample_rate


def sample_ir(room: RoomModel, n_paths: int, seed: int) -> SampledSignal:
    """One Monte Carlo IR estimate from ``n_paths`` independent paths.

    Deterministic in ``(room, n_paths, seed)``.  Discrete gains are rounded
    to float32 before conversion so WAV round trips are exact.
    """
    if n_paths < 1:
        raise InvalidInputError("n_paths must be at least 1")
    n = room.n_samples
    s = room.sample_rate
    gains = np.zeros(n)
    if room.reflection_gain != 0.0:
        rng = np.random.default_rng(seed)
        t = _sample_arrivals(room, n_paths, rng)
        bins = np.minimum(np.rint(t * s).astype(np.int64), n - 1)
        amp = _path_scale(room) * np.exp(-t / room.amplitude_decay) / n_paths
        gains += np.bincount(bins, weights=amp, minlength=n) * room.sign_pattern()
    if room.direct is not None:
        idx = min(int(round(room.direct.delay * s)), n - 1)
        gains[idx] += room.direct.amplitude
    gains = gains.astype(np.float32).astype(np.float64)
    return SampledSignal(gains * s, s)


def expected_ir(room: RoomModel, resolution: int = 64) -> np.ndarray:
    """Closed-form expectation of :func:`sample_ir` (continuous amplitudes).

    Bin probabilities are integrated with a ``resolution``-point midpoint
    rule over each sample's rounding interval.
    """
    n = room.n_samples
    s = room.sample_rate
    offsets = (np.arange(resolution) + 0.5) / resolution - 0.5
    t = (np.arange(n)[:, None] + offsets[None, :]) / s
    dens = room.arrival_density(t) * np.exp(-t / room.amplitude_decay)
    mean_gain = _path_scale(room) * dens.mean(axis=1) / s
    # Arrivals in the final half-sample also round into the last bin.
    t_tail = (n - 0.5 + (offsets + 0.5) * 0.5) / s
    tail = room.arrival_density(t_tail) * np.exp(-t_tail / room.amplitude_decay)
    mean_gain[-1] += _path_scale(room) * tail.mean() * 0.5 / s
    mean_gain *= room.sign_pattern()
    if room.direct is not None:
        mean_gain[min(int(round(room.direct.delay * s)), n - 1)] += room.direct.amplitude
    return mean_gain * s


@dataclass(frozen=True, eq=False)
class IrEnsemble:
    """Independent IR realizations and their error statistics.

    ``irs`` has shape ``(K, N)`` in continuous-amplitude units.
    """

    irs: np.ndarray
    sample_rate: float
    n_paths: int | None = None
    seeds: tuple = ()
    room: RoomModel | None = None

    def __post_init__(self):
        irs = np.array(self.irs, dtype=float, copy=True)
        if irs.ndim != 2 or irs.shape[0] < 2 or irs.shape[1] < 1:
            raise InvalidInputError("an ensemble needs at least 2 realizations")
        irs.setflags(write=False)
        object.__setattr__(self, "irs", irs)

    def __len__(self):
        return self.irs.shape[0]

    @property
    def n_samples(self) -> int:
        return self.irs.shape[1]

    @cached_property
    def reference_samples(self) -> np.ndarray:
        return self.irs.mean(axis=0)

    @cached_property
    def error_matrix(self) -> np.ndarray:
        return self.irs - self.reference_samples

    @cached_property
    def variance_envelope(self) -> np.ndarray:
        """Unbiased (K-1) per-sample variance."""
        return np.sum(self.error_matrix**2, axis=0) / (len(self) - 1)

    @property
    def reference(self) -> SampledSignal:
        return SampledSignal(self.reference_samples, self.sample_rate)

    @property
    def realizations(self) -> list:
        return [SampledSignal(row, self.sample_rate) for row in self.irs]

    @property
    def errors(self) -> list:
        return [SampledSignal(row, self.sample_rate) for row in self.error_matrix]

    def equals(self, other: "IrEnsemble") -> bool:
        return (
            self.sample_rate == other.sample_rate
            and self.n_paths == other.n_paths
            and self.irs.shape == other.irs.shape
            and bool(np.array_equal(self.irs, other.irs))
        )


def build_ensemble(room: RoomModel, n_realizations: int, n_paths: int, seed: int | None = None):
    """Realization ``k`` uses path seed ``seed + k`` (``seed`` defaults to ``room.seed``)."""
    if n_realizations < 2:
        raise InvalidInputError("n_realizations must be at least 2")
    base = room.seed if seed is None else seed
    seeds = tuple(base + k for k in range(n_realizations))
    irs = np.stack([sample_ir(room, n_paths, sd).samples for sd in seeds])
    return IrEnsemble(irs, room.sample_rate, n_paths, seeds, room)


def noise_density(ensemble: IrEnsemble) -> float:
    """Flat energy spectral density of the IR error, ``sum(var) / s**2``."""
    return float(np.sum(ensemble.variance_envelope) / ensemble.sample_rate**2)


def empirical_error_spectrum(ensemble: IrEnsemble, min_realizations: int = MIN_SPECTRUM_REALIZATIONS):
    """Per-bin unbiased variance of the error transforms (energy density)."""
    k = len(ensemble)
    if k < min_realizations:
        raise InvalidInputError(
            f"need at least {min_realizations} realizations for a stable spectrum, got {k}"
        )
    spec = np.fft.fft(ensemble.error_matrix, axis=1) / ensemble.sample_rate
    values = np.sum(np.abs(spec) ** 2, axis=0) / (k - 1)
    return PowerSpectrum(values, ensemble.sample_rate, energy=True)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

METADATA_FILE = "metadata.txt"
REQUIRED_KEYS = ("sample_rate", "n_paths", "seed")


def _write_metadata(path, meta: dict):
    with open(path, "w") as fh:
        for key, value in meta.items():
            fh.write(f"{key}={value!r}\n" if isinstance(value, float) else f"{key}={value}\n")


def read_metadata(path) -> dict:
    meta = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise MetadataError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, value = line.split("=", 1)
            meta[key.strip()] = value.strip()
    for key in REQUIRED_KEYS:
        if key not in meta:
            raise MetadataError(f"{path}: missing required key {key!r}", key=key)
    return meta


def save_ensemble(ensemble: IrEnsemble, directory) -> list:
    """Write one float32 WAV per realization plus ``metadata.txt``."""
    os.makedirs(directory, exist_ok=True)
    names = []
    for k, row in enumerate(ensemble.irs):
        name = f"ir_{k:04d}.wav"
        wavio.write_wav(os.path.join(directory, name), row / ensemble.sample_rate, ensemble.sample_rate, bits=32)
        names.append(name)
    meta = {
        "sample_rate": ensemble.sample_rate,
        "n_paths": ensemble.n_paths if ensemble.n_paths is not None else 0,
        "seed": ensemble.seeds[0] if ensemble.seeds else 0,
        "n_realizations": len(ensemble),
        "amplitude": "discrete",
    }
    if ensemble.room is not None:
        meta.update(ensemble.room.to_metadata())
    _write_metadata(os.path.join(directory, METADATA_FILE), meta)
    return names


def load_ensemble(directory) -> IrEnsemble:
    """Read a directory of IR WAV files and its metadata.

    Every ``*.wav`` file is taken in sorted order; stereo files are averaged.
    """
    meta = read_metadata(os.path.join(directory, METADATA_FILE))
    try:
        rate = float(meta["sample_rate"])
        n_paths = int(meta["n_paths"])
        seed = int(meta["seed"])
    except ValueError as exc:
        raise MetadataError(f"{directory}: bad metadata value ({exc})") from exc
    files = sorted(f for f in os.listdir(directory) if f.lower().endswith(".wav"))
    if "n_realizations" in meta and int(meta["n_realizations"]) != len(files):
        raise MetadataError(
            f"{directory}: metadata lists {meta['n_realizations']} realizations, found {len(files)} WAV files",
            key="n_realizations",
        )
    rows = []
    for name in files:
        data, file_rate = wavio.read_wav(os.path.join(directory, name))
        if file_rate != rate:
            raise InvalidInputError(f"{name}: sample rate {file_rate} differs from metadata {rate}")
        rows.append(data)
    if len({r.size for r in rows}) > 1:
        raise InvalidInputError(f"{directory}: IR files have different lengths")
    scale = rate if meta.get("amplitude", "discrete") == "discrete" else 1.0
    irs = np.stack(rows) * scale if rows else np.zeros((0, 0))
    seeds = tuple(seed + k for k in range(len(rows)))
    return IrEnsemble(irs, rate, n_paths, seeds, RoomModel.from_metadata(meta))
