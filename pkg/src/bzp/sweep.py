"""Benchmark runs and parameter sweeps.

A sweep runs every (transform/codec combination x threshold x segment count)
on one input signal and collects a :class:`~bzp.metrics.RunReport` per cell.
Rows are emitted in a deterministic order (combination, then segment count,
then ascending threshold); failures become rows with the ``error`` column
set and the sweep continues. All metric columns are written with
shortest-round-trip float formatting, so re-parsing the CSV loses nothing.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

import numpy as np

from .container import deserialize, serialize
from .entropy import CodecKind
from .errors import CodecError
from .metrics import BYTES_PER_SAMPLE, RunReport, compression_ratio, rmse, total_time
from .pipeline import (PipelineConfig, check_realtime_feasibility, compress,
                       decompress)
from .signal_io import RawSignal, read_signal, synth_eeg
from .transform import TransformKind

ALL_COMBOS = (
    (TransformKind.DCT, CodecKind.RLE),
    (TransformKind.DCT, CodecKind.ARITH),
    (TransformKind.DWT, CodecKind.RLE),
    (TransformKind.DWT, CodecKind.ARITH),
)

THR_RANGE_DEFAULT = (0.005, 0.05)
THR_POINTS_DEFAULT = 12

CSV_COLUMNS = (
    "transform", "codec", "thr", "num_segments", "segment_size",
    "rmse_std", "rmse_raw", "cr_percent", "t_comp_s", "t_reconst_s",
    "t_total_s", "t_min_s", "compressed_bytes", "original_bytes", "error",
)


def default_thresholds(lo: float = THR_RANGE_DEFAULT[0],
                       hi: float = THR_RANGE_DEFAULT[1],
                       points: int = THR_POINTS_DEFAULT,
                       linear: bool = False) -> tuple[float, ...]:
    if points < 1:
        raise ValueError("need at least one threshold point")
    if not 0 <= lo <= hi <= 1:
        raise ValueError("threshold range must satisfy 0 <= lo <= hi <= 1")
    if points == 1:
        return (lo,)
    if linear:
        return tuple(np.linspace(lo, hi, points).tolist())
    if lo <= 0:
        raise ValueError("log spacing needs a positive lower bound")
    return tuple(np.geomspace(lo, hi, points).tolist())


@dataclass
class SweepSpec:
    """What to sweep and on which input.

    The input is either a signal file (``input_path``) or, when that is
    None, a synthetic signal of ``synth_duration_s`` seconds generated from
    ``seed`` at ``sample_rate``.
    """

    thresholds: tuple[float, ...] = field(default_factory=default_thresholds)
    segment_counts: tuple[int, ...] = (10,)
    combos: tuple[tuple[TransformKind, CodecKind], ...] = ALL_COMBOS
    dwt_levels: int = 1
    input_path: str | None = None
    input_format: str = "csv"
    sample_rate: float = 256.0
    synth_duration_s: float = 10.0
    seed: int = 42

    def __post_init__(self) -> None:
        if not self.thresholds or not self.segment_counts or not self.combos:
            raise ValueError("thresholds, segment_counts, combos must be non-empty")
        for t in self.thresholds:
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"threshold {t} outside [0, 1]")

    def load_signal(self) -> RawSignal:
        if self.input_path is not None:
            return read_signal(self.input_path, self.input_format,
                               self.sample_rate)
        return synth_eeg(self.synth_duration_s, self.sample_rate, self.seed)


def evaluate_run(signal: RawSignal, config: PipelineConfig,
                 ts_seconds: float | None = None
                 ) -> tuple[RunReport, bytes, RawSignal]:
    """Compress, serialize, decompress, and measure one configuration.

    Returns the report, the container bytes, and the reconstruction. The
    reconstruction path runs from the serialized bytes so the measured
    sizes and errors are exactly what a reader of the file would see.
    """
    file, comp_timings = compress(signal, config)
    blob = serialize(file)
    recovered, rec_timings = decompress(deserialize(blob))
    timings = comp_timings + rec_timings
    t_comp, t_reconst, t_tot = total_time(timings)
    _, t_min = check_realtime_feasibility(
        timings.per_segment(config.num_segments),
        ts_seconds if ts_seconds is not None else float("inf"))
    rmse_raw = rmse(signal.samples, recovered.samples)
    original_bytes = BYTES_PER_SAMPLE * len(signal)
    report = RunReport(
        config=config,
        rmse_std=rmse_raw / file.params.sigma,
        rmse_raw=rmse_raw,
        cr_percent=compression_ratio(original_bytes, len(blob)),
        t_comp=t_comp,
        t_reconst=t_reconst,
        t_total=t_tot,
        t_min=t_min,
        segment_size=len(signal) // config.num_segments,
        compressed_bytes=len(blob),
        original_bytes=original_bytes,
    )
    return report, blob, recovered


def run_sweep(signal: RawSignal, spec: SweepSpec) -> list[dict]:
    """Run every sweep cell; returns one CSV-ready row dict per cell."""
    rows = []
    for transform, codec in spec.combos:
        for num_segments in spec.segment_counts:
            for thr in spec.thresholds:
                base = {
                    "transform": transform.value,
                    "codec": codec.value,
                    "thr": thr,
                    "num_segments": num_segments,
                    "error": "",
                }
                try:
                    config = PipelineConfig(transform, codec, thr,
                                            spec.dwt_levels, num_segments)
                    report, _, _ = evaluate_run(signal, config)
                except (CodecError, ValueError) as exc:
                    row = dict.fromkeys(CSV_COLUMNS, "")
                    row.update(base)
                    row["error"] = str(exc)
                    rows.append(row)
                    continue
                row = report.to_dict()
                row["error"] = ""
                rows.append(row)
    return rows


def _format_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_report_csv(rows: list[dict], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_format_cell(row[c]) for c in CSV_COLUMNS])


def write_report_csv_path(rows: list[dict], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        write_report_csv(rows, fh)
