"""Plot-ready CSV files.

Three layouts are used: ``freq_hz,value`` (one-sided spectra),
``bark,value`` (specific loudness) and ``snr_db,sone`` (sweeps).  Values are
written with 17 significant digits so they parse back bit-exactly.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidInputError
from .signal import PowerSpectrum

__all__ = [
    "write_columns",
    "read_columns",
    "write_spectrum_csv",
    "read_spectrum_csv",
    "write_specific_loudness_csv",
    "write_sweep_csv",
    "read_sweep_csv",
]


def write_columns(path, header, *columns):
    cols = [np.asarray(c, dtype=float) for c in columns]
    if len({c.size for c in cols}) != 1:
        raise InvalidInputError("CSV columns must have equal length")
    if len(header) != len(cols):
        raise InvalidInputError("header does not match the number of columns")
    try:
        np.savetxt(path, np.column_stack(cols), fmt="%.17g", delimiter=",", header=",".join(header), comments="")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def read_columns(path, header):
    """Read a CSV written by :func:`write_columns` and check its header."""
    try:
        with open(path) as fh:
            first = fh.readline().strip()
            data = np.loadtxt(fh, delimiter=",", ndmin=2)
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise InvalidInputError(f"{path}: malformed CSV ({exc})") from exc
    if first.split(",") != list(header):
        raise InvalidInputError(f"{path}: expected header {','.join(header)!r}, got {first!r}")
    if data.size == 0:
        data = np.zeros((0, len(header)))
    return tuple(data[:, i] for i in range(len(header)))


def write_spectrum_csv(path, spectrum: PowerSpectrum | tuple):
    """Write a one-sided ``freq_hz,value`` table.

    ``spectrum`` may be a two-sided :class:`PowerSpectrum` or an already
    one-sided ``(freqs, values)`` pair.
    """
    freqs, values = spectrum.one_sided() if isinstance(spectrum, PowerSpectrum) else spectrum
    write_columns(path, ("freq_hz", "value"), freqs, values)


def read_spectrum_csv(path):
    freqs, values = read_columns(path, ("freq_hz", "value"))
    if np.any(np.diff(freqs) <= 0):
        raise InvalidInputError(f"{path}: frequencies must be strictly ascending")
    return freqs, values


def write_specific_loudness_csv(path, specific):
    write_columns(path, ("bark", "value"), specific.grid, specific.values)


def write_sweep_csv(path, snr_db, sone):
    write_columns(path, ("snr_db", "sone"), snr_db, sone)


def read_sweep_csv(path):
    return read_columns(path, ("snr_db", "sone"))
