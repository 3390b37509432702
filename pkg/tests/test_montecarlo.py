import os

import numpy as np
import pytest

from propnoise.errors import InvalidInputError, MetadataError
from propnoise.montecarlo import (
    METADATA_FILE,
    DirectPath,
    IrEnsemble,
    RoomModel,
    build_ensemble,
    empirical_error_spectrum,
    expected_ir,
    load_ensemble,
    noise_density,
    read_metadata,
    sample_ir,
    save_ensemble,
)
from propnoise.signal import energy_snr
from propnoise.spectra import noise_density_from_snr


class TestRoomModel:
    def test_validation(self):
        with pytest.raises(InvalidInputError):
            RoomModel(ir_duration=0)
        with pytest.raises(InvalidInputError):
            RoomModel(decay_time=-1)
        with pytest.raises(InvalidInputError):
            RoomModel(direct=DirectPath(1.0, 1.0), ir_duration=0.5)

    def test_arrival_density_is_normalized(self):
        room = RoomModel()
        t = np.linspace(0, room.ir_duration, 200001)
        assert np.trapezoid(room.arrival_density(t), t) == pytest.approx(1.0, rel=1e-6)

    def test_metadata_round_trip(self):
        room = RoomModel(sample_rate=16000.0, decay_time=0.1, seed=9)
        meta = {k: str(v) for k, v in room.to_metadata().items()}
        assert RoomModel.from_metadata(meta) == room


class TestSampleIr:
    def test_deterministic(self, small_room):
        a = sample_ir(small_room, 300, 5)
        b = sample_ir(small_room, 300, 5)
        np.testing.assert_array_equal(a.samples, b.samples)
        c = sample_ir(small_room, 300, 6)
        assert not np.array_equal(a.samples, c.samples)

    def test_needs_paths(self, small_room):
        with pytest.raises(InvalidInputError):
            sample_ir(small_room, 0, 1)

    def test_direct_only_room(self):
        room = RoomModel(sample_rate=8000.0, ir_duration=0.05, reflection_gain=0.0,
                         direct=DirectPath(0.01, 0.7))
        ir = sample_ir(room, 1000, 1).samples
        expected = np.zeros(room.n_samples)
        # Gains are stored at float32 precision.
        expected[80] = float(np.float32(0.7)) * room.sample_rate
        np.testing.assert_array_equal(ir, expected)
        ens = build_ensemble(room, 5, 100)
        assert noise_density(ens) == 0.0

    def test_mean_converges_to_expected_envelope(self):
        room = RoomModel(sample_rate=8000.0, ir_duration=0.05, direct=None, seed=2)
        ir = sample_ir(room, 4_000_000, 11).samples
        ref = expected_ir(room)
        rel_rms = np.sqrt(np.mean((ir - ref) ** 2) / np.mean(ref**2))
        assert rel_rms < 0.02


class TestEnsemble:
    def test_two_realizations_give_opposite_errors(self, small_room):
        ens = build_ensemble(small_room, 2, 100)
        np.testing.assert_allclose(ens.error_matrix[0], -ens.error_matrix[1])

    def test_needs_two_realizations(self, small_room):
        with pytest.raises(InvalidInputError):
            build_ensemble(small_room, 1, 100)

    def test_seeds_follow_base_plus_index(self, small_room):
        ens = build_ensemble(small_room, 3, 50, seed=40)
        assert ens.seeds == (40, 41, 42)
        np.testing.assert_array_equal(ens.irs[2], sample_ir(small_room, 50, 42).samples)

    def test_error_statistics(self, small_ensemble):
        K = len(small_ensemble)
        err = small_ensemble.error_matrix
        sigma = np.sqrt(small_ensemble.variance_envelope)
        assert np.all(np.abs(err.mean(axis=0)) <= 4 * sigma / np.sqrt(K) + 1e-9)
        assert np.all(small_ensemble.variance_envelope >= 0)
        # Lag-1 correlation pooled over the active part of the IR.
        z = err[:, sigma > 0] / sigma[sigma > 0]
        r = np.mean(z[:, 1:] * z[:, :-1])
        assert abs(r) < 4 / np.sqrt(z.size)

    def test_noise_density_hand_value(self):
        a = np.sqrt(0.5e-8)
        irs = np.stack([np.full(4800, a), np.full(4800, -a)])
        ens = IrEnsemble(irs, 48000.0)
        np.testing.assert_allclose(ens.variance_envelope, 1e-8)
        assert noise_density(ens) == pytest.approx(4800 * 1e-8 / 48000.0**2, rel=1e-12)

    def test_density_halves_when_paths_double(self, small_room):
        d1 = noise_density(build_ensemble(small_room, 200, 400))
        d2 = noise_density(build_ensemble(small_room, 200, 800, seed=1000))
        assert d2 / d1 == pytest.approx(0.5, rel=0.1)

    def test_envelope_matches_spectral_density(self, small_ensemble):
        emp = empirical_error_spectrum(small_ensemble)
        assert emp.values.mean() == pytest.approx(noise_density(small_ensemble), rel=0.05)

    def test_snr_round_trip(self, small_ensemble):
        snr = energy_snr(small_ensemble.reference, small_ensemble.errors)
        d = noise_density_from_snr(small_ensemble.reference, snr)
        assert d == pytest.approx(noise_density(small_ensemble), rel=0.03)


class TestEmpiricalSpectrum:
    def test_requires_enough_realizations(self, small_room):
        ens = build_ensemble(small_room, 10, 100)
        with pytest.raises(InvalidInputError, match="at least 50"):
            empirical_error_spectrum(ens)

    def test_zero_errors(self):
        ens = IrEnsemble(np.ones((50, 16)), 100.0)
        np.testing.assert_array_equal(empirical_error_spectrum(ens).values, 0.0)

    def test_mean_error_transform_vanishes(self, small_ensemble):
        # Errors against the closed-form expectation, not the ensemble mean
        # (whose residuals average to zero by construction).
        err = small_ensemble.irs - expected_ir(small_ensemble.room)
        spec = np.fft.fft(err, axis=1) / small_ensemble.sample_rate
        K = len(small_ensemble)
        floor = 4 * np.sqrt(noise_density(small_ensemble)) / np.sqrt(K)
        assert np.all(np.abs(spec.mean(axis=0)) < floor)


class TestSerialization:
    def test_round_trip(self, small_ensemble, tmp_path):
        names = save_ensemble(small_ensemble, tmp_path)
        assert len(names) == len(small_ensemble)
        back = load_ensemble(tmp_path)
        assert back.equals(small_ensemble)
        assert back.room == small_ensemble.room
        assert back.seeds == small_ensemble.seeds

    def test_missing_key_is_named(self, small_ensemble, tmp_path):
        save_ensemble(small_ensemble, tmp_path)
        path = tmp_path / METADATA_FILE
        lines = [l for l in path.read_text().splitlines() if not l.startswith("n_paths")]
        path.write_text("\n".join(lines))
        with pytest.raises(MetadataError) as info:
            load_ensemble(tmp_path)
        assert info.value.key == "n_paths"

    def test_malformed_line(self, tmp_path):
        (tmp_path / METADATA_FILE).write_text("sample_rate=8000\nthis is not valid\n")
        with pytest.raises(MetadataError, match="key=value"):
            read_metadata(tmp_path / METADATA_FILE)

    def test_realization_count_mismatch(self, small_ensemble, tmp_path):
        save_ensemble(small_ensemble, tmp_path)
        os.remove(tmp_path / "ir_0000.wav")
        with pytest.raises(MetadataError) as info:
            load_ensemble(tmp_path)
        assert info.value.key == "n_realizations"
