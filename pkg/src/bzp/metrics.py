"""Distortion, compression-ratio, and timing metrics.

RMSE is reported in the standardized (unit-variance) domain as the primary
figure, with the raw-domain value (sigma times larger) alongside. The
original size is fixed at 8 bytes per sample (binary64 at rest) so
compression ratios are comparable across implementations and runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pipeline import PipelineConfig, StageTimings

BYTES_PER_SAMPLE = 8


def rmse(original, recovered) -> float:
    """Root mean square error between two equal-length sequences."""
    x = np.asarray(original, dtype=np.float64).reshape(-1)
    y = np.asarray(recovered, dtype=np.float64).reshape(-1)
    if x.size == 0:
        raise ValueError("rmse needs at least one sample")
    if x.size != y.size:
        raise ValueError(f"length mismatch: {x.size} vs {y.size}")
    d = x - y
    return float(np.sqrt(np.dot(d, d) / x.size))


def compression_ratio(original_bytes: int, compressed_bytes: int) -> float:
    """Percentage of bytes eliminated; negative when the codec expands."""
    if original_bytes <= 0:
        raise ValueError("original size must be positive")
    return (original_bytes - compressed_bytes) / original_bytes * 100.0


def total_time(timings: StageTimings) -> tuple[float, float, float]:
    """(compression time, reconstruction time, total). The total is the sum
    of the other two by construction."""
    t_comp = timings.t_lossy + timings.t_thr + timings.t_lossless
    t_reconst = timings.t_ilossless + timings.t_ilossy
    return t_comp, t_reconst, t_comp + t_reconst


@dataclass
class RunReport:
    """Everything measured for one (signal, config) compression run."""

    config: PipelineConfig
    rmse_std: float
    rmse_raw: float
    cr_percent: float
    t_comp: float
    t_reconst: float
    t_total: float
    t_min: float
    segment_size: int
    compressed_bytes: int
    original_bytes: int

    def to_dict(self) -> dict:
        """Flat mapping used for the JSON report and the sweep CSV row."""
        return {
            "transform": self.config.transform.value,
            "codec": self.config.codec.value,
            "thr": self.config.thr.thr,
            "num_segments": self.config.num_segments,
            "segment_size": self.segment_size,
            "rmse_std": self.rmse_std,
            "rmse_raw": self.rmse_raw,
            "cr_percent": self.cr_percent,
            "t_comp_s": self.t_comp,
            "t_reconst_s": self.t_reconst,
            "t_total_s": self.t_total,
            "t_min_s": self.t_min,
            "compressed_bytes": self.compressed_bytes,
            "original_bytes": self.original_bytes,
        }
