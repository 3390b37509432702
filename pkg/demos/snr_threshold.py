"""Sweep the IR SNR for two program stand-ins and locate the 0.2 sone point.

A bass-like input (power near 70 Hz) hides its rendering noise better
than a piano-like one (350-1000 Hz) because the noise follows the input
spectrum into bands where hearing is less sensitive.  Both are played at
65 dB SPL.
"""

import numpy as np

from propnoise.job import CriterionPipeline
from propnoise.montecarlo import RoomModel, expected_ir
from propnoise.signal import SampledSignal
from propnoise.stimuli import bass_like, paperize, piano_like

rate = 48000.0
room = RoomModel()
ir = SampledSignal(expected_ir(room), rate)
snrs = np.arange(-10.0, 30.5, 5.0)

for name, make in (("bass", bass_like), ("piano", piano_like)):
    pipe = CriterionPipeline(paperize(make(10.0, rate, 1)), ir)
    sweep = pipe.sweep(snrs)
    print(f"{name}: floor {pipe.floor():.4f} sone, 0.2 sone at {pipe.threshold(0.2):.2f} dB SNR")
    for snr, s in zip(snrs, sweep):
        print(f"  {snr:5.1f} dB  {s:8.4f} sone")
