"""The error of a Monte Carlo impulse response behaves like white noise.

Builds the default ensemble (200 realizations of 4000 paths, 0.5 s at
48 kHz), then compares the per-bin variance of the error transforms with
the flat density sum(var) / s**2 predicted from the variance envelope.
"""

import time

import numpy as np

from propnoise.montecarlo import RoomModel, build_ensemble, empirical_error_spectrum, noise_density
from propnoise.signal import energy_snr
from propnoise.spectra import fractional_octave_average

t0 = time.perf_counter()
room = RoomModel()
ens = build_ensemble(room, 200, 4000, seed=1)
spec = empirical_error_spectrum(ens)
print(f"ensemble of {len(ens)} IRs, {ens.n_samples} samples each, built in {time.perf_counter() - t0:.2f} s")

density = noise_density(ens)
pos = spec.frequencies > 0
centres, means = fractional_octave_average(spec.frequencies[pos], spec.values[pos], 3, 50.0, 20000.0)

print(f"\npredicted flat density: {10 * np.log10(density):.2f} dB re 1 (full-scale units)")
print("third-octave  measured  deviation")
for fc, m in zip(centres, means):
    print(f"{fc:10.0f} Hz  {10 * np.log10(m):8.2f}  {10 * np.log10(m / density):+9.2f}")

# The same noise expressed as an energy SNR of the expected response.
snr = energy_snr(ens.reference, ens.errors)
print(f"\nenergy SNR of a single 4000-path realization: {10 * np.log10(snr):.1f} dB")
