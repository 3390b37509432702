"""Config-driven evaluation: input audio + IR source -> error loudness vs SNR.

A job file is plain ``key=value`` text with optional ``[section]`` headers;
section names only group keys and are otherwise ignored.  Every key has a
matching command-line flag that overrides it.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field, fields

import numpy as np

from . import wavio
from .errors import InvalidInputError, UnreachableTargetError
from .loudness import BandPowers, CriterionResult, KlModel, ThresholdConfig, band_powers, evaluate_criterion
from .montecarlo import DirectPath, RoomModel, expected_ir, load_ensemble
from .signal import PowerSpectrum, SampledSignal, forward_dft
from .spectra import (
    WindowSpec,
    analysis_length,
    dynamic_spectrum_narrowband,
    noise_density_from_snr,
    quantization_spectrum,
    static_error_spectrum,
)
from .stimuli import paperize
from .wavio import PCM16_STEP

__all__ = [
    "JobConfig",
    "load_job_config",
    "write_job_config",
    "load_input",
    "room_from_config",
    "CriterionPipeline",
    "bisect_threshold",
    "SNR_SEARCH_RANGE",
]

#: SNR interval (dB) searched by the threshold command.
SNR_SEARCH_RANGE = (-30.0, 60.0)


@dataclass(frozen=True)
class JobConfig:
    """Everything a command needs; defaults mirror the listening-test setup."""

    input: str | None = None
    ir_source: str = "synthesize"
    ir_dir: str | None = None
    out: str = "out"
    seed: int = 0
    calibration_db: float = 65.0
    window: str = "hann"
    win_len: int = 512
    hop: int = 256
    bits: int = 32
    paperize: bool = False
    snr_db: float = 20.0
    snr_min: float = -10.0
    snr_max: float = 30.0
    snr_step: float = 0.5
    target: float = 0.2
    runs: int = 10
    n_realizations: int = 200
    n_paths: int = 4000
    room_sample_rate: float = 48000.0
    room_ir_duration: float = 0.5
    room_direct_delay: float = 0.005
    room_direct_amplitude: float = 1.0
    room_arrival_density_growth: float = 1000.0
    room_decay_time: float = 0.08
    room_reflection_gain: float = 0.05
    kind: str = "pink"
    freq: float = 1000.0
    duration: float = 10.0
    level: float = 55.0

    def __post_init__(self):
        if self.ir_source not in ("synthesize", "import"):
            raise InvalidInputError("ir_source must be 'synthesize' or 'import'")
        if self.ir_source == "import" and not self.ir_dir:
            raise InvalidInputError("ir_source=import needs ir_dir")
        if self.ir_source == "synthesize" and self.ir_dir:
            raise InvalidInputError("give either ir_dir (import) or a synthesized room, not both")
        if not 0.0 <= self.calibration_db <= 120.0:
            raise InvalidInputError(f"calibration_db must lie in 0-120 dB SPL, got {self.calibration_db}")
        if self.bits not in (16, 32):
            raise InvalidInputError("bits must be 16 or 32")
        if self.snr_step <= 0 or self.snr_max < self.snr_min:
            raise InvalidInputError("need snr_step > 0 and snr_max >= snr_min")
        if self.runs < 1:
            raise InvalidInputError("runs must be at least 1")
        self.window_spec  # validates the window

    @property
    def window_spec(self) -> WindowSpec:
        return WindowSpec(self.window, self.win_len, self.hop)

    @property
    def quantization(self) -> float:
        return PCM16_STEP if self.bits == 16 else 0.0

    def snr_grid(self) -> np.ndarray:
        n = int(math.floor((self.snr_max - self.snr_min) / self.snr_step + 1e-9)) + 1
        return self.snr_min + self.snr_step * np.arange(n)


_FIELD_TYPES = {f.name: f.type for f in fields(JobConfig)}


def _convert(key, value):
    kind = _FIELD_TYPES[key]
    if value is None:
        return None
    if "bool" in kind:
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in ("1", "true", "yes", "on"):
            return True
        if text in ("0", "false", "no", "off"):
            return False
        raise InvalidInputError(f"{key}: expected a boolean, got {value!r}")
    try:
        if kind.startswith("int"):
            return int(value)
        if kind.startswith("float"):
            return float(value)
    except ValueError as exc:
        raise InvalidInputError(f"{key}: {exc}") from exc
    return str(value)


def load_job_config(path=None, overrides: dict | None = None) -> JobConfig:
    """Read a job file (optional) and apply ``overrides`` (``None`` values are skipped)."""
    values = {}
    if path is not None:
        parser = configparser.ConfigParser(default_section="__defaults__", interpolation=None)
        parser.optionxform = str
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise OSError(f"cannot read config {path}: {exc}") from exc
        try:
            parser.read_string("[__top__]\n" + text, source=str(path))
        except configparser.Error as exc:
            raise InvalidInputError(f"{path}: {exc}") from exc
        for section in parser.sections():
            for key, value in parser.items(section):
                norm = key.replace("-", "_").replace(".", "_")
                if section == "room" and not norm.startswith("room_"):
                    norm = "room_" + norm
                if norm not in _FIELD_TYPES:
                    raise InvalidInputError(f"{path}: unknown key {key!r} in [{section.strip('_')}]")
                values[norm] = value
    for key, value in (overrides or {}).items():
        if value is not None:
            if key not in _FIELD_TYPES:
                raise InvalidInputError(f"unknown option {key!r}")
            values[key] = value
    return JobConfig(**{k: _convert(k, v) for k, v in values.items()})


def write_job_config(cfg: JobConfig, path):
    """Write the resolved config so the run can be reproduced from it."""
    room_keys = [f.name for f in fields(cfg) if f.name.startswith("room_")]
    try:
        with open(path, "w") as fh:
            fh.write("# resolved configuration\n")
            for f in fields(cfg):
                if f.name in room_keys:
                    continue
                value = getattr(cfg, f.name)
                if value is not None:
                    fh.write(f"{f.name}={value!r}\n" if isinstance(value, float) else f"{f.name}={value}\n")
            fh.write("\n[room]\n")
            for key in room_keys:
                fh.write(f"{key[5:]}={getattr(cfg, key)!r}\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def room_from_config(cfg: JobConfig) -> RoomModel:
    return RoomModel(
        sample_rate=cfg.room_sample_rate,
        ir_duration=cfg.room_ir_duration,
        direct=DirectPath(cfg.room_direct_delay, cfg.room_direct_amplitude),
        arrival_density_growth=cfg.room_arrival_density_growth,
        decay_time=cfg.room_decay_time,
        reflection_gain=cfg.room_reflection_gain,
        seed=cfg.seed,
    )


def load_input(cfg: JobConfig) -> SampledSignal:
    if not cfg.input:
        raise InvalidInputError("this command needs an input audio file (--input)")
    samples, rate = wavio.read_wav(cfg.input)
    if samples.size == 0:
        raise InvalidInputError(f"{cfg.input}: empty audio")
    sig = SampledSignal(samples, rate)
    return paperize(sig) if cfg.paperize else sig


def reference_ir(cfg: JobConfig, rate: float) -> SampledSignal:
    """Expected IR of the configured room, or the mean of an imported ensemble."""
    if cfg.ir_source == "import":
        ens = load_ensemble(cfg.ir_dir)
        ir = ens.reference
    else:
        room = room_from_config(cfg)
        ir = SampledSignal(expected_ir(room), room.sample_rate)
    if ir.sample_rate != rate:
        raise InvalidInputError(f"IR sample rate {ir.sample_rate} differs from the input's {rate}")
    return ir


def bisect_threshold(func, target, lo, hi, tol=0.1):
    """SNR where a nonincreasing ``func`` crosses ``target``.

    Raises :class:`UnreachableTargetError` when the target lies outside
    ``[func(hi), func(lo)]``.
    """
    s_lo, s_hi = func(lo), func(hi)
    if target < s_hi:
        raise UnreachableTargetError(
            f"target {target:.4g} sone is below the achievable floor {s_hi:.4g} sone (S at {hi:g} dB)", s_hi
        )
    if target > s_lo:
        raise UnreachableTargetError(
            f"target {target:.4g} sone exceeds S at the lowest searched SNR ({lo:g} dB): {s_lo:.4g} sone", s_lo
        )
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if func(mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass
class CriterionPipeline:
    """Masker and error band powers for one input, IR and window.

    The ideal output ``f_i * h`` is the masker, played back at
    ``calibration_db`` dB SPL.  The error is the narrowband dynamic
    spectrum of ``f_i`` scaled by the noise density implied by the SNR,
    plus the quantization floor when ``quantization > 0``.  Band powers are
    linear in the density, so a sweep costs one band integration.
    """

    input: SampledSignal
    ir: SampledSignal
    window: WindowSpec = field(default_factory=WindowSpec)
    calibration_db: float = 65.0
    quantization: float = 0.0
    threshold_cfg: ThresholdConfig = field(default_factory=ThresholdConfig)
    kl: KlModel = field(default_factory=KlModel)

    def __post_init__(self):
        if self.input.sample_rate != self.ir.sample_rate:
            raise InvalidInputError("input and IR sample rates differ")
        rate = self.input.sample_rate
        n = analysis_length(len(self.input), len(self.ir), self.window.hop)
        n = max(n, -(-self.window.length // self.window.hop) * self.window.hop)
        self.grid_length = n
        self.duration = n / rate
        fi = forward_dft(self.input, n)
        fh = forward_dft(self.ir, n)
        masker = PowerSpectrum(np.abs(fi.bins * fh.bins) ** 2 / self.duration, rate)
        total = masker.total()
        if not total > 0:
            raise InvalidInputError("the rendered output is silent; the masker needs nonzero power")
        #: dB SPL of unit full-scale power for this job.
        self.library_calibration_db = self.calibration_db - 10.0 * math.log10(total)
        self.masker_spectrum = masker.calibrated(self.library_calibration_db)
        self.ir_energy = self.ir.energy()
        unit = dynamic_spectrum_narrowband(static_error_spectrum(fi, 1.0), self.window)
        self.unit_error_spectrum = unit.as_power(self.duration).calibrated(self.library_calibration_db)
        if self.quantization > 0:
            q = quantization_spectrum(self.quantization, PowerSpectrum(np.zeros(n), rate))
            self.quantization_spectrum = q.calibrated(self.library_calibration_db)
        else:
            self.quantization_spectrum = None
        tables = self.threshold_cfg.tables
        self.masker_bands = band_powers(self.masker_spectrum, tables=tables)
        self.unit_error_bands = band_powers(self.unit_error_spectrum, tables=tables)
        zero = np.zeros(28)
        self.quantization_bands = (
            band_powers(self.quantization_spectrum, tables=tables) if self.quantization_spectrum is not None
            else BandPowers(zero, tables.lower_edges, tables.upper_edges)
        )

    @classmethod
    def from_config(cls, cfg: JobConfig, signal: SampledSignal | None = None) -> "CriterionPipeline":
        sig = load_input(cfg) if signal is None else signal
        ir = reference_ir(cfg, sig.sample_rate)
        return cls(sig, ir, cfg.window_spec, cfg.calibration_db, cfg.quantization)

    def density(self, snr_db: float) -> float:
        return noise_density_from_snr(self.ir, 10.0 ** (snr_db / 10.0))

    def error_spectrum(self, snr_db: float) -> PowerSpectrum:
        d = self.density(snr_db)
        spec = self.unit_error_spectrum.with_values(self.unit_error_spectrum.values * d)
        if self.quantization_spectrum is not None:
            spec = spec.with_values(spec.values + self.quantization_spectrum.values)
        return spec

    def error_bands(self, snr_db: float) -> BandPowers:
        d = self.density(snr_db)
        u = self.unit_error_bands
        return BandPowers(u.powers * d + self.quantization_bands.powers, u.lower_edges, u.upper_edges)

    def evaluate(self, snr_db: float) -> CriterionResult:
        return evaluate_criterion(self.masker_bands, self.error_bands(snr_db), self.threshold_cfg, self.kl)

    def loudness(self, snr_db: float) -> float:
        return self.evaluate(snr_db).loudness

    def sweep(self, snrs) -> np.ndarray:
        return np.array([self.loudness(float(x)) for x in snrs])

    def floor(self) -> float:
        """S with no IR error (quantization floor only, if any)."""
        zero = BandPowers(self.quantization_bands.powers, self.masker_bands.lower_edges, self.masker_bands.upper_edges)
        return evaluate_criterion(self.masker_bands, zero, self.threshold_cfg, self.kl).loudness

    def threshold(self, target: float, lo: float = SNR_SEARCH_RANGE[0], hi: float = SNR_SEARCH_RANGE[1],
                  tol: float = 0.1) -> float:
        return bisect_threshold(self.loudness, target, lo, hi, tol)
