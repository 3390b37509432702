"""Stationary loudness of tones and noises, plus the masked-error criterion.

The 1 kHz tone at 40 dB SPL defines one sone, and every 10 dB roughly
doubles loudness.  The second table shows the relative loudness of a
broadband error under a pink masker as the error level rises.
"""

import math

import numpy as np

from propnoise.loudness import error_loudness, evaluate_criterion, zwicker_loudness
from propnoise.signal import PowerSpectrum, power_spectrum
from propnoise.stimuli import normalize_rms, pink_noise, sine

rate = 48000.0
tone = sine(1000.0, 1.0, rate)
ps = power_spectrum(tone)
cal = -10 * math.log10(tone.power())
print("1 kHz tone")
for level in (30, 40, 50, 60, 70, 80):
    s, _ = zwicker_loudness(ps.calibrated(level + cal))
    print(f"  {level} dB SPL -> {s:6.3f} sone")

pink = power_spectrum(normalize_rms(pink_noise(1.0, rate, 0)))
masker = pink.calibrated(65.0 + 20.0)  # -20 dBFS RMS plays at 65 dB SPL
s_pink, _ = zwicker_loudness(masker)
print(f"\npink noise at 65 dB SPL: {s_pink:.2f} sone")

floor = evaluate_criterion(masker, masker.with_values(np.zeros(len(masker)))).loudness
print(f"zero-error floor under that masker: {floor:.4f} sone")
print("error level below masker -> relative loudness")
for rel in (-40, -30, -20, -10, 0, 10):
    err = PowerSpectrum(masker.values * 10 ** (rel / 10), rate, calibration_db=masker.calibration_db)
    print(f"  {rel:+4d} dB -> {error_loudness(masker, err):7.4f} sone")
