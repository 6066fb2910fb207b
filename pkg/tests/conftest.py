from pathlib import Path

import pytest

import bzp

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def synth_10s() -> bzp.RawSignal:
    """The 10-second seed-42 signal used by the end-to-end criteria."""
    return bzp.synth_eeg(10.0, 256.0, 42)


@pytest.fixture(scope="session")
def fixture_60s() -> bzp.RawSignal:
    """The bundled 60-second synthetic EEG fixture (raw-f64-le)."""
    return bzp.read_signal(DATA_DIR / "eeg_60s_256hz_seed42.f64", "raw", 256.0)
