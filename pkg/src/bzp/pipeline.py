"""End-to-end compression and reconstruction.

Compression: standardize, segment, then per segment transform -> threshold
-> entropy-encode, assembled into a :class:`~bzp.container.CompressedFile`.
Reconstruction: per segment decode -> inverse transform -> trim padding,
concatenate in order, destandardize once.

Wall-clock time for the five codec stages (forward transform, threshold,
entropy encode, entropy decode, inverse transform) is accumulated across
segments into :class:`StageTimings`. Standardization, segmentation, and
container assembly are bookkeeping and are not timed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from time import perf_counter

import numpy as np

from .container import CompressedFile, CompressedSegment
from .entropy import CodecKind, decode, encode
from .preprocess import destandardize, segment, standardize
from .signal_io import RawSignal
from .transform import (CoefficientBlock, ThresholdSpec, TransformKind,
                        dct_forward, dct_inverse, dwt_forward, dwt_inverse,
                        threshold)


@dataclass
class PipelineConfig:
    """One studied combination: transform x codec x threshold x segmentation."""

    transform: TransformKind
    codec: CodecKind
    thr: ThresholdSpec
    dwt_levels: int = 1
    num_segments: int = 1

    def __post_init__(self) -> None:
        self.transform = TransformKind(self.transform)
        self.codec = CodecKind(self.codec)
        if isinstance(self.thr, float | int):
            self.thr = ThresholdSpec(float(self.thr))
        if self.dwt_levels < 1:
            raise ValueError("dwt_levels must be >= 1")
        if self.num_segments < 1:
            raise ValueError("num_segments must be >= 1")


@dataclass
class StageTimings:
    """Seconds spent in each codec stage, summed over segments."""

    t_lossy: float = 0.0
    t_thr: float = 0.0
    t_lossless: float = 0.0
    t_ilossless: float = 0.0
    t_ilossy: float = 0.0

    def __add__(self, other: "StageTimings") -> "StageTimings":
        return StageTimings(
            self.t_lossy + other.t_lossy,
            self.t_thr + other.t_thr,
            self.t_lossless + other.t_lossless,
            self.t_ilossless + other.t_ilossless,
            self.t_ilossy + other.t_ilossy,
        )

    def per_segment(self, num_segments: int) -> "StageTimings":
        """Mean per-segment stage times (for the arrival-cadence check)."""
        if num_segments < 1:
            raise ValueError("num_segments must be >= 1")
        k = 1.0 / num_segments
        return StageTimings(self.t_lossy * k, self.t_thr * k,
                            self.t_lossless * k, self.t_ilossless * k,
                            self.t_ilossy * k)


def compress(signal: RawSignal,
             config: PipelineConfig) -> tuple[CompressedFile, StageTimings]:
    """Compress a signal; returns the container and compression-stage timings.

    DWT segments are zero-extended to the next multiple of 2^levels after
    standardization; the pad length is recorded per segment so reconstruction
    can trim it.
    """
    standardized, params = standardize(signal)
    pieces = segment(standardized, config.num_segments)
    timings = StageTimings()
    is_dwt = config.transform is TransformKind.DWT
    compressed = []
    for piece in pieces:
        data = piece.data
        pad = 0
        if is_dwt:
            block_len = 1 << config.dwt_levels
            pad = -data.size % block_len
            if pad:
                data = np.concatenate([data, np.zeros(pad)])
        t0 = perf_counter()
        if is_dwt:
            block = dwt_forward(data, config.dwt_levels)
        else:
            block = dct_forward(data)
        t1 = perf_counter()
        block, _ = threshold(block, config.thr)
        t2 = perf_counter()
        payload = encode(block.coefficients, config.codec)
        t3 = perf_counter()
        timings.t_lossy += t1 - t0
        timings.t_thr += t2 - t1
        timings.t_lossless += t3 - t2
        compressed.append(CompressedSegment(
            config.transform, config.codec,
            config.dwt_levels if is_dwt else 0,
            pad, piece.data.size, payload))
    return CompressedFile(params, signal.sample_rate, compressed), timings


def decompress(file: CompressedFile) -> tuple[RawSignal, StageTimings]:
    """Reconstruct a signal; returns it and the reconstruction-stage timings."""
    timings = StageTimings()
    pieces = []
    for seg in file.segments:
        t0 = perf_counter()
        coefficients = decode(seg.payload)
        t1 = perf_counter()
        block = CoefficientBlock(seg.transform, coefficients,
                                 seg.original_length + seg.pad_length,
                                 seg.dwt_levels)
        if seg.transform is TransformKind.DWT:
            data = dwt_inverse(block)
        else:
            data = dct_inverse(block)
        t2 = perf_counter()
        timings.t_ilossless += t1 - t0
        timings.t_ilossy += t2 - t1
        pieces.append(data[:seg.original_length])
    samples = destandardize(np.concatenate(pieces), file.params)
    return RawSignal(samples, file.sample_rate), timings


def check_realtime_feasibility(timings: StageTimings,
                               ts_seconds: float) -> tuple[bool, float]:
    """Can segments arriving every T_s seconds be processed in time?

    ``timings`` must hold per-segment mean stage times (see
    :meth:`StageTimings.per_segment`); the floor T_min is the slowest stage,
    and the cadence is feasible when T_s >= T_min.
    """
    t_min = max(timings.t_lossy, timings.t_thr, timings.t_lossless,
                timings.t_ilossless, timings.t_ilossy)
    feasible = math.isfinite(ts_seconds) and ts_seconds >= t_min
    return feasible, t_min
