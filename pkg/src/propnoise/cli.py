"""Command-line front end.

Subcommands: ``simulate``, ``spectrum``, ``loudness``, ``sweep``,
``threshold``, ``testsignal``.  Exit codes: 0 success, 2 invalid input,
3 unreachable target, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import csvio, stimuli, wavio
from .errors import InvalidInputError, UnreachableTargetError
from .job import CriterionPipeline, JobConfig, load_input, load_job_config, room_from_config, write_job_config
from .loudness import default_tables
from .montecarlo import build_ensemble, load_ensemble, noise_density, save_ensemble
from .signal import PowerSpectrum, forward_dft
from .spectra import (
    analysis_length,
    dynamic_spectrum_delta,
    dynamic_spectrum_full,
    dynamic_spectrum_narrowband,
    quantization_spectrum,
    static_error_spectrum,
    stitch_dynamic_noise,
)

__all__ = [
    "main",
    "build_parser",
    "cmd_simulate",
    "cmd_spectrum",
    "cmd_loudness",
    "cmd_sweep",
    "cmd_threshold",
    "cmd_testsignal",
    "EXIT_OK",
    "EXIT_INVALID",
    "EXIT_UNREACHABLE",
    "EXIT_IO",
]

EXIT_OK, EXIT_INVALID, EXIT_UNREACHABLE, EXIT_IO = 0, 2, 3, 4

CONFIG_ECHO = "job.cfg"


def _prepare_out(cfg: JobConfig):
    try:
        os.makedirs(cfg.out, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {cfg.out}: {exc}") from exc
    write_job_config(cfg, os.path.join(cfg.out, CONFIG_ECHO))


def _ensemble(cfg: JobConfig):
    if cfg.ir_source == "import":
        return load_ensemble(cfg.ir_dir)
    return build_ensemble(room_from_config(cfg), cfg.n_realizations, cfg.n_paths, seed=cfg.seed)


def cmd_simulate(cfg: JobConfig, log=print):
    """Synthesize an IR ensemble and write it as WAV files plus metadata."""
    if cfg.ir_source == "import":
        raise InvalidInputError("simulate synthesizes a room; drop ir_dir")
    os.makedirs(cfg.out, exist_ok=True)
    ens = build_ensemble(room_from_config(cfg), cfg.n_realizations, cfg.n_paths, seed=cfg.seed)
    names = save_ensemble(ens, cfg.out)
    write_job_config(cfg, os.path.join(cfg.out, CONFIG_ECHO))
    log(f"wrote {len(names)} impulse responses to {cfg.out}")
    log(f"noise density {noise_density(ens):.6g}")
    return ens


def cmd_spectrum(cfg: JobConfig, log=print):
    """Measured (stitched, averaged over ``runs``) and estimated error spectra.

    Writes ``measured.csv``, ``full.csv``, ``narrowband.csv``, ``delta.csv``
    and ``static.csv`` as one-sided power densities (full-scale units per Hz).
    """
    _prepare_out(cfg)
    sig = load_input(cfg)
    ens = _ensemble(cfg)
    if ens.sample_rate != sig.sample_rate:
        raise InvalidInputError(f"IR sample rate {ens.sample_rate} differs from the input's {sig.sample_rate}")
    spec = cfg.window_spec
    rate = sig.sample_rate
    n = analysis_length(len(sig), ens.n_samples, spec.hop)
    T = n / rate
    q = cfg.quantization

    acc = np.zeros(n)
    for r in range(cfg.runs):
        noise = stitch_dynamic_noise(sig, ens.error_matrix, spec, quantization=q, seed=cfg.seed + r,
                                     reference_ir=ens.reference)
        acc += np.abs(forward_dft(noise, n).bins) ** 2
    measured = PowerSpectrum(acc / cfg.runs / T, rate)

    fi = forward_dft(sig, n)
    static = static_error_spectrum(fi, noise_density(ens))
    estimates = {
        "static": static,
        "full": dynamic_spectrum_full(fi, ens.variance_envelope, spec),
        "narrowband": dynamic_spectrum_narrowband(static, spec),
        "delta": dynamic_spectrum_delta(static, spec),
    }
    out = {"measured": measured}
    for name, est in estimates.items():
        power = est.as_power(T)
        if q > 0:
            power = power.with_values(power.values + quantization_spectrum(q, power).values)
        out[name] = power
    for name, ps in out.items():
        csvio.write_spectrum_csv(os.path.join(cfg.out, f"{name}.csv"), ps)
    log(f"wrote {', '.join(out)} spectra ({n} bins, {cfg.runs} stitched runs) to {cfg.out}")
    return out


def cmd_loudness(cfg: JobConfig, snr: float | None = None, log=print, pipeline=None):
    """Error loudness at one SNR; prints S and the band table."""
    _prepare_out(cfg)
    snr = cfg.snr_db if snr is None else snr
    pipe = CriterionPipeline.from_config(cfg) if pipeline is None else pipeline
    res = pipe.evaluate(snr)
    t = default_tables()
    log(f"S = {res.loudness:.6g} sone at SNR {snr:g} dB (zero-error floor {pipe.floor():.6g} sone)")
    log("band  centre_hz  masker_db_spl  error_db_spl")
    with np.errstate(divide="ignore"):
        lm = 10 * np.log10(res.masker_bands.powers)
        le = 10 * np.log10(res.error_bands.powers)
    for i in range(28):
        log(f"{i:4d}  {t.centres[i]:9.1f}  {lm[i]:13.2f}  {le[i]:12.2f}")
    csvio.write_specific_loudness_csv(os.path.join(cfg.out, "specific_loudness.csv"), res.specific)
    csvio.write_specific_loudness_csv(os.path.join(cfg.out, "masker_specific_loudness.csv"), res.masker_specific)
    with open(os.path.join(cfg.out, "loudness.txt"), "w") as fh:
        fh.write(f"snr_db={snr!r}\nsone={res.loudness!r}\n")
    return res.loudness


def cmd_sweep(cfg: JobConfig, log=print, pipeline=None):
    """``snr_db,sone`` table over ``snr_min .. snr_max``."""
    _prepare_out(cfg)
    pipe = CriterionPipeline.from_config(cfg) if pipeline is None else pipeline
    snrs = cfg.snr_grid()
    sones = pipe.sweep(snrs)
    path = os.path.join(cfg.out, "sweep.csv")
    csvio.write_sweep_csv(path, snrs, sones)
    log(f"wrote {snrs.size} points to {path}; S from {sones[0]:.4g} to {sones[-1]:.4g} sone")
    return snrs, sones


def cmd_threshold(cfg: JobConfig, log=print, pipeline=None):
    """SNR at which S equals ``target`` (bisection to below 0.1 dB)."""
    _prepare_out(cfg)
    pipe = CriterionPipeline.from_config(cfg) if pipeline is None else pipeline
    snr = pipe.threshold(cfg.target)
    with open(os.path.join(cfg.out, "threshold.txt"), "w") as fh:
        fh.write(f"target_sone={cfg.target!r}\nsnr_db={snr!r}\n")
    log(f"SNR {snr:.3f} dB gives S = {cfg.target:g} sone")
    return snr


_TEST_SIGNALS = {
    "sine": lambda c: stimuli.sine(c.freq, c.duration, c.room_sample_rate, amplitude=math.sqrt(2) * 0.1),
    "pink": lambda c: stimuli.normalize_rms(stimuli.pink_noise(c.duration, c.room_sample_rate, c.seed)),
    "white": lambda c: stimuli.normalize_rms(stimuli.white_noise(c.duration, c.room_sample_rate, c.seed)),
    "bass": lambda c: stimuli.bass_like(c.duration, c.room_sample_rate, c.seed),
    "piano": lambda c: stimuli.piano_like(c.duration, c.room_sample_rate, c.seed),
}


def cmd_testsignal(cfg: JobConfig, log=print):
    """Write ``<kind>.wav`` (-20 dBFS RMS) and a sidecar with its calibration.

    The sidecar gives ``calibration_db``, the dB SPL of unit full-scale power
    that makes the file play at ``level`` dB SPL.
    """
    if cfg.kind not in _TEST_SIGNALS:
        raise InvalidInputError(f"kind must be one of {', '.join(_TEST_SIGNALS)}, got {cfg.kind!r}")
    _prepare_out(cfg)
    sig = _TEST_SIGNALS[cfg.kind](cfg)
    path = os.path.join(cfg.out, f"{cfg.kind}.wav")
    wavio.write_wav(path, sig.samples, sig.sample_rate, bits=cfg.bits)
    cal = cfg.level - 10.0 * math.log10(sig.power())
    with open(os.path.join(cfg.out, f"{cfg.kind}.txt"), "w") as fh:
        fh.write(f"kind={cfg.kind}\nlevel_db_spl={cfg.level!r}\ncalibration_db={cal!r}\n")
    log(f"wrote {path} ({sig.duration:g} s, {cfg.level:g} dB SPL at calibration {cal:.3f} dB)")
    return path


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _shared_parser():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("shared options")
    g.add_argument("--config", metavar="PATH", help="key=value job file ([section] headers allowed)")
    g.add_argument("--seed", type=int)
    g.add_argument("--out", metavar="DIR")
    g.add_argument("--calibration-db", type=float, metavar="X", help="masker playback level, dB SPL (default 65)")
    g.add_argument("--window", choices=["hann", "tri", "rect"])
    g.add_argument("--win-len", type=int, metavar="N")
    g.add_argument("--hop", type=int, metavar="N")
    g.add_argument("--bits", type=int, choices=[16, 32])
    g.add_argument("--input", metavar="WAV")
    g.add_argument("--ir-dir", metavar="DIR", help="import an IR ensemble instead of synthesizing one")
    g.add_argument("--paperize", action="store_const", const=True, help="crop to 10 s and fade 0.5 s at both ends")
    return p


def build_parser():
    shared = _shared_parser()
    parser = argparse.ArgumentParser(prog="propnoise", description="Audibility of Monte Carlo IR noise.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", parents=[shared], help="synthesize an IR ensemble")
    p.add_argument("--n-realizations", type=int)
    p.add_argument("--n-paths", type=int)

    p = sub.add_parser("spectrum", parents=[shared], help="measured and estimated error spectra")
    p.add_argument("--runs", type=int, help="stitched runs to average (default 10)")
    p.add_argument("--n-realizations", type=int)
    p.add_argument("--n-paths", type=int)

    p = sub.add_parser("loudness", parents=[shared], help="error loudness at one SNR")
    p.add_argument("--snr", dest="snr_db", type=float, metavar="DB")

    p = sub.add_parser("sweep", parents=[shared], help="error loudness over an SNR range")
    p.add_argument("--snr-min", type=float)
    p.add_argument("--snr-max", type=float)
    p.add_argument("--snr-step", type=float)

    p = sub.add_parser("threshold", parents=[shared], help="SNR reaching a target loudness")
    p.add_argument("--target", type=float, metavar="SONE")

    p = sub.add_parser("testsignal", parents=[shared], help="write a test signal WAV")
    p.add_argument("kind", nargs="?", choices=sorted(_TEST_SIGNALS))
    p.add_argument("--freq", type=float)
    p.add_argument("--duration", type=float)
    p.add_argument("--level", type=float, help="playback level, dB SPL")
    return parser


_COMMANDS = {
    "simulate": cmd_simulate,
    "spectrum": cmd_spectrum,
    "loudness": cmd_loudness,
    "sweep": cmd_sweep,
    "threshold": cmd_threshold,
    "testsignal": cmd_testsignal,
}


def config_from_args(args) -> JobConfig:
    overrides = {k: v for k, v in vars(args).items() if k not in ("command", "config")}
    if overrides.get("ir_dir"):
        overrides["ir_source"] = "import"
    return load_job_config(args.config, overrides)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        _COMMANDS[args.command](cfg)
    except UnreachableTargetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK
