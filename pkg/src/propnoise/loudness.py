"""Stationary Zwicker loudness and the relative error-loudness criterion.

Absolute loudness (a sound heard against the internal noise)::

    28 band powers -> low-frequency correction 1 -> 20 core bands
    -> N(p) = C p**a -> dN = max(N(p + p0) - N(p0 + p0/3), 0)
    -> low-frequency correction 2 -> upper-slope spreading -> integral

The criterion runs the masker and the full audio (masker plus error) through
the same chain without the subtraction, spreads both with a linearized
upper slope, and subtracts the specific-loudness curves under a soft
(logistic) threshold ``k_l * l_m``.

Band powers are kept as intensities relative to (20 uPa)^2.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from .errors import InvalidInputError
from .signal import PowerSpectrum

__all__ = [
    "STEVENS_C",
    "STEVENS_A",
    "BARK_GRID",
    "ZwickerTables",
    "load_tables",
    "BandPowers",
    "CoreLoudness",
    "SpecificLoudness",
    "KlModel",
    "ThresholdConfig",
    "CriterionResult",
    "bark_from_frequency",
    "band_powers",
    "core_loudness",
    "steven_power_law",
    "lfc2_factor",
    "low_freq_correction_2",
    "upper_slope_curve",
    "specific_loudness",
    "total_loudness",
    "zwicker_loudness",
    "soft_threshold",
    "kl_curves",
    "kl_from_kp",
    "evaluate_criterion",
    "error_loudness",
]

STEVENS_C = 0.03175 * math.sqrt(2.0)
STEVENS_A = 0.25

#: Bark positions 0.0 .. 24.0 in 0.1 steps (241 points).
BARK_GRID = np.round(np.arange(241) * 0.1, 10)
BARK_GRID.setflags(write=False)

#: Level assigned to the core-loudness reference of the linear spreading.
AF_REFERENCE = 30.0

# Critical-band edges (Hz) with the first band starting at 20 Hz.
_CRITICAL_BAND_EDGES = np.array([
    20, 100, 200, 300, 400, 510, 630, 770, 920, 1080, 1270, 1480, 1720,
    2000, 2320, 2700, 3150, 3700, 4400, 5300, 6400, 7700, 9500, 12000, 15500,
], dtype=float)


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ZwickerTables:
    """Numeric tables of the stationary procedure (see the bundled data file)."""

    centres: np.ndarray
    lower_edges: np.ndarray
    upper_edges: np.ndarray
    core_band: np.ndarray
    lfc_ranges: np.ndarray
    lfc: np.ndarray
    upper_bark: np.ndarray
    ltq_db: np.ndarray
    a0_db: np.ndarray
    dcb_db: np.ndarray
    ddf_db: np.ndarray
    slope_ranges: np.ndarray
    upper_slopes: np.ndarray
    version: str = "1"

    @property
    def internal_noise(self) -> np.ndarray:
        """Per-core-band internal-noise excitation ``3 * 10**(ltq/10)``."""
        return 3.0 * 10.0 ** (self.ltq_db / 10.0)

    @property
    def lower_bark(self) -> np.ndarray:
        return np.concatenate([[0.0], self.upper_bark[:-1]])


def _parse_sections(text: str) -> dict:
    sections, current, version = {}, None, "1"
    for raw in text.splitlines():
        line = raw.strip()
        m = re.match(r"#\s*table_version\s*=\s*(\S+)", line)
        if m:
            version = m.group(1)
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            current = line.strip("[]").strip()
            sections[current] = []
            continue
        if current is None:
            raise InvalidInputError(f"data outside a section: {line!r}")
        sections[current].append([float(v) for v in line.split()])
    sections["_version"] = version
    return sections


def load_tables(path=None) -> ZwickerTables:
    """Load a table file; the bundled one when ``path`` is omitted."""
    if path is None:
        text = resources.files("propnoise").joinpath("data/zwicker_stationary.txt").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    sec = _parse_sections(text)
    try:
        tob = np.array(sec["third_octave_bands"])
        cb = np.array(sec["core_bands"])
        tables = ZwickerTables(
            centres=tob[:, 1],
            lower_edges=tob[:, 2],
            upper_edges=tob[:, 3],
            core_band=tob[:, 4].astype(int),
            lfc_ranges=np.array(sec["low_freq_correction_ranges"]).ravel(),
            lfc=np.array(sec["low_freq_correction"]),
            upper_bark=cb[:, 1],
            ltq_db=cb[:, 2],
            a0_db=cb[:, 3],
            dcb_db=cb[:, 4],
            ddf_db=cb[:, 5],
            slope_ranges=np.array(sec["slope_ranges"]).ravel(),
            upper_slopes=np.array(sec["upper_slopes"]),
            version=sec["_version"],
        )
    except KeyError as exc:
        raise InvalidInputError(f"loudness table file lacks section {exc}") from exc
    if tables.centres.size != 28 or tables.upper_bark.size != 20:
        raise InvalidInputError("loudness tables need 28 analysis bands and 20 core bands")
    if tables.lfc.shape != (tables.lfc_ranges.size, 11):
        raise InvalidInputError("low-frequency correction table must have 11 columns per range")
    if tables.upper_slopes.shape[0] != tables.slope_ranges.size:
        raise InvalidInputError("upper-slope rows must match slope ranges")
    return tables


@lru_cache(maxsize=1)
def default_tables() -> ZwickerTables:
    return load_tables()


# ---------------------------------------------------------------------------
# Data types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BandPowers:
    """Analysis-band intensities relative to (20 uPa)^2."""

    powers: np.ndarray
    lower_edges: np.ndarray
    upper_edges: np.ndarray

    def __post_init__(self):
        p = np.array(self.powers, dtype=float)
        if p.shape != (28,):
            raise InvalidInputError("BandPowers needs 28 entries")
        if np.any(p < 0) or not np.all(np.isfinite(p)):
            raise InvalidInputError("band powers must be finite and nonnegative")
        object.__setattr__(self, "powers", p)

    def levels_db(self) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return 10.0 * np.log10(self.powers)

    def __add__(self, other: "BandPowers") -> "BandPowers":
        return BandPowers(self.powers + other.powers, self.lower_edges, self.upper_edges)


@dataclass(frozen=True, eq=False)
class CoreLoudness:
    """Core loudness of the 20 critical bands.

    ``values`` are ``dN`` in absolute mode and raw ``N`` in criterion mode;
    ``threshold`` holds ``N_t = N(4/3 p0)`` per band.
    """

    values: np.ndarray
    threshold: np.ndarray
    mode: str = "absolute"

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.shape != (20,):
            raise InvalidInputError("CoreLoudness needs 20 entries")
        if np.any(v < 0):
            raise InvalidInputError("core loudness must be nonnegative")
        object.__setattr__(self, "values", v)


@dataclass(frozen=True, eq=False)
class SpecificLoudness:
    """Specific loudness (sone/Bark) sampled on :data:`BARK_GRID`."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.shape != BARK_GRID.shape:
            raise InvalidInputError(f"specific loudness needs {BARK_GRID.size} grid values")
        if np.any(v < 0):
            raise InvalidInputError("specific loudness must be nonnegative")
        object.__setattr__(self, "values", v)

    @property
    def grid(self) -> np.ndarray:
        return BARK_GRID


@dataclass(frozen=True)
class KlModel:
    """Mask-threshold ratio in specific loudness, mean and spread over Bark.

    The mean is flat at 0.0052 on [4.4, 18.1] Bark, rising with a quartic
    below and a quadratic above; the spread follows the same knots with a
    floor of 0.004.
    """

    low_knee: float = 4.4
    high_knee: float = 18.1
    mean_floor: float = 0.0052
    spread_floor: float = 0.004
    low_coeff: float = 0.0013
    mean_high_coeff: float = 0.0011
    spread_high_coeff: float = 0.002
    C: float = STEVENS_C
    a: float = STEVENS_A

    def mean(self, x):
        x = np.asarray(x, dtype=float)
        low = self.low_coeff * np.clip(self.low_knee - x, 0.0, None) ** 4
        high = self.mean_high_coeff * np.clip(x - self.high_knee, 0.0, None) ** 2
        return self.mean_floor + low + high

    def spread(self, x):
        x = np.asarray(x, dtype=float)
        low = self.low_coeff * np.clip(self.low_knee - x, 0.0, None) ** 4
        high = self.spread_high_coeff * np.clip(x - self.high_knee, 0.0, None) ** 2
        return self.spread_floor + low + high


@dataclass(frozen=True, eq=False)
class ThresholdConfig:
    """Internal noise and correction tables for the loudness chain.

    ``internal_noise`` is the per-core-band excitation of the physiological
    masker (20 values).  ``hard_core_threshold`` re-enables the subtraction
    of ``N_t`` before spreading in criterion mode.
    """

    tables: ZwickerTables = field(default_factory=default_tables)
    internal_noise: np.ndarray | None = None
    hard_core_threshold: bool = False

    def __post_init__(self):
        noise = self.tables.internal_noise if self.internal_noise is None else self.internal_noise
        noise = np.array(noise, dtype=float)
        if noise.shape != (20,) or np.any(noise <= 0):
            raise InvalidInputError("internal noise must be 20 strictly positive values")
        object.__setattr__(self, "internal_noise", noise)

    @property
    def core_threshold(self) -> np.ndarray:
        """``N_t = N(p0 + p0/3)`` per core band."""
        return steven_power_law(self.internal_noise * 4.0 / 3.0)


# ---------------------------------------------------------------------------
# Frequency mapping and band powers
# ---------------------------------------------------------------------------


def bark_from_frequency(f):
    """Critical-band rate by interpolating the 24-band edge table.

    The first band spans 20-100 Hz, so 20 Hz maps to 0 and 100 Hz to 1.
    Inputs are clamped to [20, 20000] Hz; everything above 15.5 kHz maps
    to 24.
    """
    f = np.clip(np.asarray(f, dtype=float), 20.0, 20000.0)
    out = np.interp(f, _CRITICAL_BAND_EDGES, np.arange(_CRITICAL_BAND_EDGES.size, dtype=float))
    return float(out) if out.ndim == 0 else out


def band_powers(spectrum: PowerSpectrum, calibration_db: float | None = None, tables=None) -> BandPowers:
    """Integrate a power density over the 28 analysis bands.

    Each bin's density is spread uniformly over its width, so band edges may
    fall inside bins.  ``calibration_db`` (or the spectrum's own) is the dB
    SPL of unit power.
    """
    if spectrum.energy:
        raise InvalidInputError("band_powers needs a power density; divide the energy spectrum by its duration")
    cal = spectrum.calibration_db if calibration_db is None else calibration_db
    if cal is None:
        raise InvalidInputError("spectrum is uncalibrated: supply calibration_db (dB SPL of unit power)")
    t = default_tables() if tables is None else tables
    freqs, vals = spectrum.one_sided()
    df = spectrum.bin_width
    # Cumulative power at bin edges f_k + df/2; the DC bin starts at 0.
    edges = np.concatenate([[0.0], freqs + 0.5 * df])
    widths = np.diff(edges)
    cum = np.concatenate([[0.0], np.cumsum(vals * widths)])
    hi = np.interp(t.upper_edges, edges, cum)
    lo = np.interp(t.lower_edges, edges, cum)
    power = np.maximum(hi - lo, 0.0) * 10.0 ** (cal / 10.0)
    return BandPowers(power, t.lower_edges, t.upper_edges)


# ---------------------------------------------------------------------------
# Core loudness
# ---------------------------------------------------------------------------


def steven_power_law(p, C: float = STEVENS_C, a: float = STEVENS_A):
    """Sensation magnitude ``C * p**a`` of an excitation intensity ``p``."""
    return C * np.asarray(p, dtype=float) ** a


def _low_freq_correction_1(levels: np.ndarray, t: ZwickerTables) -> np.ndarray:
    """Level-dependent reduction of the 11 lowest bands; returns corrected intensities."""
    out = np.zeros(28)
    with np.errstate(divide="ignore"):
        for i, level in enumerate(levels):
            if not np.isfinite(level):
                continue
            if i < t.lfc.shape[1]:
                col = t.lfc[:, i]
                fits = np.nonzero(level <= t.lfc_ranges - col)[0]
                row = fits[0] if fits.size else col.size - 1
                level = level + col[row]
            out[i] = 10.0 ** (level / 10.0)
    return out


def core_excitation(bands: BandPowers, tables=None, field_type: str = "free") -> np.ndarray:
    """Corrected, grouped and ear-weighted intensities of the 20 core bands."""
    t = default_tables() if tables is None else tables
    corrected = _low_freq_correction_1(bands.levels_db(), t)
    grouped = np.bincount(t.core_band, weights=corrected, minlength=20)
    shift = -t.a0_db - t.dcb_db
    if field_type == "diffuse":
        shift = shift + t.ddf_db
    elif field_type != "free":
        raise InvalidInputError("field_type must be 'free' or 'diffuse'")
    return grouped * 10.0 ** (shift / 10.0)


def core_loudness(bands: BandPowers, masker_bands: BandPowers | None = None, cfg: ThresholdConfig | None = None,
                  mode: str = "absolute"):
    """Core loudness of the 20 critical bands.

    ``absolute``: ``dN = max(N(p + p_m) - N(p_m + p_m/3), 0)`` with ``p_m`` the
    internal noise plus the (optional) masker; returns one :class:`CoreLoudness`.

    ``criterion``: ``bands`` is the full audio (masker plus error); returns
    ``(N, N_m)`` with ``N = N(p + p0)`` and ``N_m = N(p_masker + p0)``.
    """
    cfg = ThresholdConfig() if cfg is None else cfg
    t = cfg.tables
    noise = cfg.internal_noise
    n_t = cfg.core_threshold
    if mode == "absolute":
        p = core_excitation(bands, t)
        p_m = noise + (core_excitation(masker_bands, t) if masker_bands is not None else 0.0)
        dn = np.maximum(steven_power_law(p + p_m) - steven_power_law(p_m * 4.0 / 3.0), 0.0)
        return CoreLoudness(dn, n_t, "absolute")
    if mode == "criterion":
        if masker_bands is None:
            raise InvalidInputError("criterion mode needs masker band powers")
        n_full = steven_power_law(core_excitation(bands, t) + noise)
        n_mask = steven_power_law(core_excitation(masker_bands, t) + noise)
        return CoreLoudness(n_full, n_t, "criterion"), CoreLoudness(n_mask, n_t, "criterion")
    raise InvalidInputError(f"mode must be 'absolute' or 'criterion', got {mode!r}")


def lfc2_factor(dn):
    """``min(0.4 + 0.32 dN**0.2, 1)``; negative ``dN`` counts as zero."""
    dn = np.clip(np.asarray(dn, dtype=float), 0.0, None)
    return np.minimum(0.4 + 0.32 * dn**0.2, 1.0)


def low_freq_correction_2(n, n_t=0.0, mode: str = "absolute"):
    """Correction of the lowest critical band.

    Absolute mode scales ``dN = max(n - n_t, 0)`` by ``c``.  Criterion mode
    returns ``c (n - n_t) + n_t``, which leaves ``n = n_t`` unchanged.
    """
    d = np.asarray(n, dtype=float) - n_t
    if mode == "absolute":
        d = np.maximum(d, 0.0)
        return lfc2_factor(d) * d
    if mode == "criterion":
        return lfc2_factor(d) * d + n_t
    raise InvalidInputError(f"mode must be 'absolute' or 'criterion', got {mode!r}")


def _apply_lfc2(core: CoreLoudness) -> CoreLoudness:
    values = core.values.copy()
    values[0] = low_freq_correction_2(values[0], 0.0 if core.mode == "absolute" else core.threshold[0], core.mode)
    return CoreLoudness(values, core.threshold, core.mode)


# ---------------------------------------------------------------------------
# Specific loudness
# ---------------------------------------------------------------------------


def _slope_row(n: float, ranges: np.ndarray) -> int:
    idx = np.nonzero(ranges < n)[0]
    return int(idx[0]) if idx.size else ranges.size - 1


def upper_slope_curve(band: int, n0: float, tables=None, grid=BARK_GRID) -> np.ndarray:
    """Specific-loudness pattern of one core band carrying ``n0``.

    Zero below the band, ``n0`` inside it, and above it a piecewise-linear
    descent whose steepness depends on the current value and on the
    critical band being crossed.
    """
    t = default_tables() if tables is None else tables
    zup = np.concatenate([t.upper_bark, [24.0]])
    z_lo = 0.0 if band == 0 else zup[band - 1]
    zs, ns = [z_lo, zup[band]], [n0, n0]
    z, n, k = zup[band], n0, band + 1
    while n > 0 and k < zup.size and z < 24.0:
        col = min(k - 1, t.upper_slopes.shape[1] - 1)
        row = _slope_row(n, t.slope_ranges)
        slope = t.upper_slopes[row, col]
        target = t.slope_ranges[row]
        dz = (n - target) / slope
        if z + dz <= zup[k]:
            z, n = z + dz, target
        else:
            n -= (zup[k] - z) * slope
            z = zup[k]
            k += 1
        zs.append(z)
        ns.append(n)
    out = np.interp(grid, zs, ns, left=0.0, right=0.0)
    # Grid points just below the band edge belong to lower bands only.
    out[grid < z_lo - 1e-9] = 0.0
    return np.maximum(out, 0.0)


@lru_cache(maxsize=4)
def _reference_patterns(tables_id: int) -> np.ndarray:
    t = _TABLE_REGISTRY[tables_id]
    pats = np.stack([upper_slope_curve(i, AF_REFERENCE, t) for i in range(20)])
    pats.setflags(write=False)
    return pats


_TABLE_REGISTRY: dict = {}


def reference_patterns(tables=None) -> np.ndarray:
    """``AF_i(30)`` for all 20 bands, shape ``(20, len(BARK_GRID))``."""
    t = default_tables() if tables is None else tables
    _TABLE_REGISTRY[id(t)] = t
    return _reference_patterns(id(t))


def specific_loudness(core: CoreLoudness, linear: bool = True, tables=None) -> SpecificLoudness:
    """``l(x) = max_i AF_i(N_i)(x)`` on :data:`BARK_GRID`.

    ``linear`` uses ``AF_i(N) = (N/30) AF_i(30)``, which commutes with
    differences of core loudness.  ``linear=False`` evaluates the
    level-dependent slopes of the standard procedure.
    """
    if linear:
        pats = reference_patterns(tables) * (core.values[:, None] / AF_REFERENCE)
    else:
        pats = np.stack([upper_slope_curve(i, n, tables) for i, n in enumerate(core.values)])
    return SpecificLoudness(pats.max(axis=0))


def total_loudness(l: SpecificLoudness) -> float:
    """Trapezoidal integral over 0-24 Bark (sone)."""
    return float(np.trapezoid(l.values, BARK_GRID))


def zwicker_loudness(spectrum, calibration_db=None, cfg: ThresholdConfig | None = None, linear: bool = False,
                     masker=None):
    """Absolute stationary loudness of a power spectrum (or :class:`BandPowers`).

    Returns ``(sone, SpecificLoudness)``.
    """
    cfg = ThresholdConfig() if cfg is None else cfg
    bands = spectrum if isinstance(spectrum, BandPowers) else band_powers(spectrum, calibration_db, cfg.tables)
    if masker is not None and not isinstance(masker, BandPowers):
        masker = band_powers(masker, calibration_db, cfg.tables)
    core = _apply_lfc2(core_loudness(bands, masker, cfg, "absolute"))
    l = specific_loudness(core, linear=linear, tables=cfg.tables)
    return total_loudness(l), l


# ---------------------------------------------------------------------------
# Soft threshold and k_l
# ---------------------------------------------------------------------------


def soft_threshold(a, mean_t, spread_t):
    """Expected ``max(a - a_t, 0)`` for a logistic threshold ``a_t``.

    ``sc ln(exp((a - mean_t)/sc) + 1)`` with ``sc = sqrt(3) spread_t / pi``;
    zero spread gives the hard ``max(a - mean_t, 0)``.
    """
    a, mean_t, spread_t = (np.asarray(v, dtype=float) for v in (a, mean_t, spread_t))
    if np.any(spread_t < 0):
        raise InvalidInputError("spread must be nonnegative")
    diff = a - mean_t
    sc = math.sqrt(3.0) / math.pi * spread_t
    with np.errstate(divide="ignore", invalid="ignore"):
        soft = sc * np.logaddexp(diff / np.where(sc > 0, sc, 1.0), 0.0)
    out = np.where(sc > 0, soft, np.maximum(diff, 0.0))
    return float(out) if out.ndim == 0 else out


def kl_curves(x, model: KlModel | None = None):
    """``(mean, spread)`` of ``k_l`` at Bark position(s) ``x``."""
    m = KlModel() if model is None else model
    x = np.asarray(x, dtype=float)
    if np.any((x < 0) | (x > 24)):
        raise InvalidInputError("Bark position must lie in [0, 24]")
    mean, spread = m.mean(x), m.spread(x)
    if mean.ndim == 0:
        return float(mean), float(spread)
    return mean, spread


def kl_from_kp(k_p, C: float = STEVENS_C, a: float = STEVENS_A):
    """Convert a power threshold ratio to a specific-loudness ratio, ``C((1+k_p)**a - 1)``."""
    k_p = np.asarray(k_p, dtype=float)
    if np.any(k_p < 0):
        raise InvalidInputError("k_p must be nonnegative")
    out = C * ((1.0 + k_p) ** a - 1.0)
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# Criterion
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CriterionResult:
    loudness: float
    masker_bands: BandPowers
    error_bands: BandPowers
    core: CoreLoudness
    masker_core: CoreLoudness
    specific: SpecificLoudness
    masker_specific: SpecificLoudness
    difference: np.ndarray

    def floor(self, kl: KlModel | None = None) -> float:
        """Criterion value this masker yields for a zero error."""
        m = KlModel() if kl is None else kl
        lm = self.masker_specific.values
        d = soft_threshold(np.zeros_like(lm), m.mean(BARK_GRID) * lm, m.spread(BARK_GRID) * lm)
        return float(np.trapezoid(d, BARK_GRID))


def _as_bands(x, cfg, calibration_db=None):
    if isinstance(x, BandPowers):
        return x
    if isinstance(x, PowerSpectrum):
        return band_powers(x, calibration_db, cfg.tables)
    raise InvalidInputError(f"expected PowerSpectrum or BandPowers, got {type(x).__name__}")


def evaluate_criterion(masker_spectrum, error_spectrum, cfg: ThresholdConfig | None = None,
                       kl: KlModel | None = None, calibration_db=None) -> CriterionResult:
    """Relative loudness of an error masked by the ideal output, with intermediates."""
    cfg = ThresholdConfig() if cfg is None else cfg
    kl = KlModel() if kl is None else kl
    p_m = _as_bands(masker_spectrum, cfg, calibration_db)
    p_e = _as_bands(error_spectrum, cfg, calibration_db)
    n_full, n_mask = core_loudness(p_m + p_e, p_m, cfg, "criterion")
    n_full, n_mask = _apply_lfc2(n_full), _apply_lfc2(n_mask)
    if cfg.hard_core_threshold:
        n_full = CoreLoudness(np.maximum(n_full.values - n_full.threshold, 0), n_full.threshold, "criterion")
        n_mask = CoreLoudness(np.maximum(n_mask.values - n_mask.threshold, 0), n_mask.threshold, "criterion")
    l = specific_loudness(n_full, linear=True, tables=cfg.tables)
    l_m = specific_loudness(n_mask, linear=True, tables=cfg.tables)
    lm = l_m.values
    diff = soft_threshold(l.values - lm, kl.mean(BARK_GRID) * lm, kl.spread(BARK_GRID) * lm)
    S = float(np.trapezoid(diff, BARK_GRID))
    return CriterionResult(S, p_m, p_e, n_full, n_mask, l, l_m, diff)


def error_loudness(masker_spectrum, error_spectrum, cfg: ThresholdConfig | None = None,
                   kl: KlModel | None = None, calibration_db=None) -> float:
    """Relative loudness (sone) of the error under the masker."""
    return evaluate_criterion(masker_spectrum, error_spectrum, cfg, kl, calibration_db).loudness
