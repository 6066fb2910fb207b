"""Loading, saving, and synthesizing sampled signals.

Two on-disk formats are supported:

* ``csv`` -- one decimal sample per line, ``\\n`` separators, ``.`` decimal
  point. An optional header row is skipped if its first line is non-numeric.
  Values are written with shortest-round-trip formatting so a write/read
  cycle reproduces the exact doubles.
* ``raw`` -- headerless IEEE-754 binary64, little-endian ("raw-f64-le").
  Round trips are bit-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import SignalFormatError

FORMAT_CSV = "csv"
FORMAT_RAW = "raw"
FORMATS = (FORMAT_CSV, FORMAT_RAW)

DEFAULT_SAMPLE_RATE = 256.0

# Synthetic EEG recipe: (frequency Hz, amplitude) per rhythm band.
SYNTH_BANDS = (
    (2.0, 50.0),   # delta
    (6.0, 30.0),   # theta
    (10.0, 20.0),  # alpha
    (20.0, 10.0),  # beta
)
SYNTH_NOISE_SIGMA = 5.0
SYNTH_MIN_RATE = 64.0  # below this the 20 Hz band is not representable


@dataclass
class RawSignal:
    """An ordered, single-channel run of real-valued samples.

    ``samples`` is coerced to a 1-D float64 array. Signals must be non-empty
    and entirely finite, and ``sample_rate`` (Hz) must be positive.
    """

    samples: np.ndarray
    sample_rate: float

    def __post_init__(self) -> None:
        self.samples = np.asarray(self.samples, dtype=np.float64).reshape(-1)
        self.sample_rate = float(self.sample_rate)
        if self.samples.size == 0:
            raise ValueError("signal must contain at least one sample")
        if not np.isfinite(self.samples).all():
            raise ValueError("signal contains non-finite samples")
        if not math.isfinite(self.sample_rate) or self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")

    def __len__(self) -> int:
        return int(self.samples.size)

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate


def read_signal(path: str | Path, fmt: str = FORMAT_CSV,
                sample_rate: float = DEFAULT_SAMPLE_RATE) -> RawSignal:
    """Read a signal file. The sample rate is not stored in either format
    and must be supplied by the caller (CLI flag, default 256 Hz)."""
    path = Path(path)
    if fmt == FORMAT_CSV:
        samples = _read_csv(path)
    elif fmt == FORMAT_RAW:
        samples = _read_raw(path)
    else:
        raise ValueError(f"unknown signal format {fmt!r}")
    if samples.size == 0:
        raise SignalFormatError(f"{path}: file contains no samples")
    if not np.isfinite(samples).all():
        raise SignalFormatError(f"{path}: file contains non-finite samples")
    return RawSignal(samples, sample_rate)


def write_signal(signal: RawSignal, path: str | Path, fmt: str = FORMAT_CSV) -> None:
    path = Path(path)
    if fmt == FORMAT_CSV:
        lines = "\n".join(repr(float(v)) for v in signal.samples)
        path.write_text(lines + "\n")
    elif fmt == FORMAT_RAW:
        path.write_bytes(signal.samples.astype("<f8", copy=False).tobytes())
    else:
        raise ValueError(f"unknown signal format {fmt!r}")


def _read_csv(path: Path) -> np.ndarray:
    try:
        text = path.read_text()
    except OSError as exc:
        raise SignalFormatError(f"{path}: {exc}") from exc
    lines = text.splitlines()
    start = 0
    if lines:
        try:
            float(lines[0])
        except ValueError:
            start = 1  # header row
    values = np.empty(len(lines) - start, dtype=np.float64)
    for i, line in enumerate(lines[start:]):
        try:
            values[i] = float(line)
        except ValueError as exc:
            raise SignalFormatError(
                f"{path}: non-numeric cell on line {start + i + 1}: {line!r}"
            ) from exc
    return values


def _read_raw(path: Path) -> np.ndarray:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise SignalFormatError(f"{path}: {exc}") from exc
    if len(data) % 8 != 0:
        raise SignalFormatError(
            f"{path}: raw file length {len(data)} is not a multiple of 8"
        )
    return np.frombuffer(data, dtype="<f8").astype(np.float64)


def synth_eeg(duration_s: float, sample_rate: float, seed: int) -> RawSignal:
    """Generate a deterministic EEG-like test signal.

    The signal is a sum of four rhythm-band sinusoids (2/6/10/20 Hz with
    amplitudes 50/30/20/10) with seeded uniform-random phases, plus seeded
    Gaussian noise (sigma = 5). The generator is numpy's PCG64, whose output
    stream is documented and stable, so equal arguments give bit-identical
    signals. Draw order: one phase per band (in band order), then the noise
    vector.
    """
    if not (math.isfinite(duration_s) and duration_s > 0):
        raise ValueError(f"duration must be positive, got {duration_s}")
    if not (math.isfinite(sample_rate) and sample_rate >= SYNTH_MIN_RATE):
        raise ValueError(
            f"sample_rate must be >= {SYNTH_MIN_RATE} Hz to represent the "
            f"beta band, got {sample_rate}"
        )
    if seed < 0:
        raise ValueError("seed must be a non-negative integer")
    n = int(math.floor(duration_s * sample_rate))
    if n == 0:
        raise ValueError("duration too short: produces zero samples")
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    t = np.arange(n) / sample_rate
    x = np.zeros(n)
    for freq_hz, amplitude in SYNTH_BANDS:
        phase = rng.uniform(0.0, 2.0 * np.pi)
        x += amplitude * np.sin(2.0 * np.pi * freq_hz * t + phase)
    x += rng.normal(0.0, SYNTH_NOISE_SIGMA, size=n)
    return RawSignal(x, float(sample_rate))
