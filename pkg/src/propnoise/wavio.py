"""WAV reading and writing (mono in memory, PCM16 or float32 on disk)."""

from __future__ import annotations

import numpy as np
from scipy.io import wavfile

from .errors import InvalidInputError

__all__ = ["read_wav", "write_wav", "PCM16_STEP"]

#: Quantization interval of 16-bit PCM on a +-1 full scale.
PCM16_STEP = 2.0 / 65536


def read_wav(path):
    """Return ``(samples, sample_rate)`` as float64 full-scale mono.

    Stereo (or wider) files are averaged to mono.
    """
    try:
        rate, data = wavfile.read(path)
    except (OSError, ValueError) as exc:
        raise OSError(f"cannot read WAV file {path}: {exc}") from exc
    if data.dtype == np.int16:
        data = data.astype(np.float64) / 32768.0
    elif data.dtype == np.int32:
        data = data.astype(np.float64) / 2147483648.0
    elif data.dtype == np.uint8:
        data = (data.astype(np.float64) - 128.0) / 128.0
    elif data.dtype.kind == "f":
        data = data.astype(np.float64)
    else:
        raise InvalidInputError(f"{path}: unsupported sample format {data.dtype}")
    if data.ndim == 2:
        data = data.mean(axis=1)
    return data, float(rate)


def write_wav(path, samples, sample_rate, bits=32):
    """Write mono samples as float32 (``bits=32``) or PCM16 (``bits=16``).

    PCM16 output is rounded to the nearest step and clipped to full scale.
    """
    samples = np.asarray(samples, dtype=np.float64)
    rate = int(round(sample_rate))
    if rate != sample_rate:
        raise InvalidInputError(f"WAV requires an integer sample rate, got {sample_rate}")
    if bits == 32:
        data = samples.astype(np.float32)
    elif bits == 16:
        data = np.clip(np.rint(samples * 32768.0), -32768, 32767).astype(np.int16)
    else:
        raise InvalidInputError(f"bits must be 16 or 32, got {bits}")
    try:
        wavfile.write(path, rate, data)
    except OSError as exc:
        raise OSError(f"cannot write WAV file {path}: {exc}") from exc
