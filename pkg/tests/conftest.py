import numpy as np
import pytest

from propnoise.montecarlo import RoomModel, build_ensemble


@pytest.fixture(scope="session")
def small_room():
    """A short, low-rate room so ensemble tests stay fast."""
    return RoomModel(sample_rate=8000.0, ir_duration=0.1, seed=3)


@pytest.fixture(scope="session")
def small_ensemble(small_room):
    return build_ensemble(small_room, 60, 500)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
