"""Standardization and segmentation of signals ahead of transform coding.

The whole signal is standardized once to zero mean and unit variance (the
(mu, sigma) pair is kept so the affine map can be inverted after
reconstruction), then split into contiguous segments. Segmentation never
drops samples: the last segment absorbs the division remainder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSignalError
from .signal_io import RawSignal


@dataclass(frozen=True)
class StandardizationParams:
    """Mean and population standard deviation of the source samples."""

    mu: float
    sigma: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mu) and math.isfinite(self.sigma)):
            raise ValueError("standardization parameters must be finite")
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")


@dataclass
class StandardizedSegment:
    """One contiguous slice of the standardized signal."""

    data: np.ndarray
    segment_index: int
    original_offset: int

    def __post_init__(self) -> None:
        self.data = np.asarray(self.data, dtype=np.float64).reshape(-1)
        if self.data.size == 0:
            raise ValueError("segment data must be non-empty")
        if self.segment_index < 0 or self.original_offset < 0:
            raise ValueError("segment_index and original_offset must be >= 0")


def standardize(signal: RawSignal) -> tuple[np.ndarray, StandardizationParams]:
    """Map samples to (x - mu) / sigma, with sigma the population (1/N)
    standard deviation. Rejects constant signals rather than inventing a
    scale for them."""
    x = signal.samples
    if x.size < 2:
        raise DegenerateSignalError(
            f"need at least 2 samples to standardize, got {x.size}"
        )
    mu = float(x.mean())
    sigma = float(x.std())
    if sigma == 0.0:
        raise DegenerateSignalError("constant signal has zero standard deviation")
    return (x - mu) / sigma, StandardizationParams(mu, sigma)


def destandardize(standardized: np.ndarray, params: StandardizationParams) -> np.ndarray:
    """Invert :func:`standardize`: y * sigma + mu."""
    y = np.asarray(standardized, dtype=np.float64)
    return y * params.sigma + params.mu


def segment(standardized: np.ndarray, num_segments: int) -> list[StandardizedSegment]:
    """Split into ``num_segments`` contiguous pieces.

    The first N-1 segments have length floor(L/N); the last absorbs the
    remainder. Concatenating the pieces in order reproduces the input
    exactly.
    """
    x = np.asarray(standardized, dtype=np.float64).reshape(-1)
    length = x.size
    if num_segments < 1 or num_segments > length:
        raise ValueError(
            f"num_segments must be in [1, {length}], got {num_segments}"
        )
    sp = length // num_segments
    segments = []
    for k in range(num_segments):
        start = k * sp
        stop = start + sp if k < num_segments - 1 else length
        segments.append(StandardizedSegment(x[start:stop].copy(), k, start))
    return segments


def segments_for_sampling_time(sample_rate: float, total_samples: int,
                               ts_seconds: float) -> int:
    """Number of segments implied by a per-segment sampling period T_s.

    Each segment nominally holds round(T_s * rate) samples (clamped to at
    least one sample); short signals collapse to a single segment.
    """
    if not (math.isfinite(sample_rate) and sample_rate > 0):
        raise ValueError(f"sample_rate must be positive, got {sample_rate}")
    if not (math.isfinite(ts_seconds) and ts_seconds > 0):
        raise ValueError(f"ts_seconds must be positive, got {ts_seconds}")
    if total_samples <= 0:
        raise ValueError(f"total_samples must be positive, got {total_samples}")
    per_segment = max(1, int(round(ts_seconds * sample_rate)))
    return max(1, total_samples // per_segment)
