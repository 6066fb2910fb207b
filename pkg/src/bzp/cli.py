"""Command-line interface.

Subcommands::

    bzp gen <duration_s> <rate_hz> <seed> <output>      synthesize a signal
    bzp compress [flags] <input> <output>               compress + report
    bzp decompress [flags] <input> <output>             reconstruct a file
    bzp sweep [flags]                                   parameter sweep CSV

Exit codes: 0 success, 1 runtime failure, 2 usage error. Every failing path
prints exactly one diagnostic line to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .container import deserialize
from .entropy import CodecKind
from .errors import CodecError
from .pipeline import PipelineConfig, decompress
from .preprocess import segments_for_sampling_time
from .signal_io import (DEFAULT_SAMPLE_RATE, FORMATS, read_signal, synth_eeg,
                        write_signal)
from .sweep import (ALL_COMBOS, SweepSpec, default_thresholds, evaluate_run,
                    run_sweep, write_report_csv, write_report_csv_path)
from .transform import TransformKind


class _Parser(argparse.ArgumentParser):
    """Argument parser that emits a single diagnostic line on usage errors."""

    def error(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _threshold(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"threshold {value} outside [0, 1]")
    return value


def _positive(kind):
    def convert(text: str):
        try:
            value = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}")
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive: {text}")
        return value
    return convert


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bzp",
                     description="Hybrid lossy/lossless biosignal codec")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a synthetic test signal")
    p_gen.add_argument("duration", type=_positive(float), help="seconds")
    p_gen.add_argument("rate", type=_positive(float), help="Hz")
    p_gen.add_argument("seed", type=int)
    p_gen.add_argument("output")
    p_gen.add_argument("--format", choices=FORMATS, default="csv")

    p_comp = sub.add_parser("compress", help="compress a signal file")
    p_comp.add_argument("input")
    p_comp.add_argument("output")
    p_comp.add_argument("--transform", choices=[t.value for t in TransformKind],
                        default="dct")
    p_comp.add_argument("--codec", choices=[c.value for c in CodecKind],
                        default="rle")
    p_comp.add_argument("--thr", type=_threshold, default=0.01)
    p_comp.add_argument("--levels", type=_positive(int), default=1,
                        help="DWT decomposition depth")
    seg = p_comp.add_mutually_exclusive_group()
    seg.add_argument("--segments", type=_positive(int), default=None)
    seg.add_argument("--ts", type=_positive(float), default=None,
                     help="per-segment sampling period in seconds")
    p_comp.add_argument("--rate", type=_positive(float),
                        default=DEFAULT_SAMPLE_RATE)
    p_comp.add_argument("--format", choices=FORMATS, default="csv",
                        help="input signal format")

    p_dec = sub.add_parser("decompress", help="reconstruct a compressed file")
    p_dec.add_argument("input")
    p_dec.add_argument("output")
    p_dec.add_argument("--format", choices=FORMATS, default="csv",
                       help="output signal format")

    p_sweep = sub.add_parser("sweep", help="run a parameter sweep")
    p_sweep.add_argument("--input", default=None,
                         help="signal file; omit to use a synthetic signal")
    p_sweep.add_argument("--format", choices=FORMATS, default="csv")
    p_sweep.add_argument("--rate", type=_positive(float),
                         default=DEFAULT_SAMPLE_RATE)
    p_sweep.add_argument("--duration", type=_positive(float), default=10.0,
                         help="synthetic signal length in seconds")
    p_sweep.add_argument("--seed", type=int, default=42)
    p_sweep.add_argument("--transform",
                         choices=[t.value for t in TransformKind],
                         default=None, help="restrict to one transform")
    p_sweep.add_argument("--codec", choices=[c.value for c in CodecKind],
                         default=None, help="restrict to one codec")
    p_sweep.add_argument("--thr-min", type=_threshold, default=0.005)
    p_sweep.add_argument("--thr-max", type=_threshold, default=0.05)
    p_sweep.add_argument("--thr-points", type=_positive(int), default=12)
    p_sweep.add_argument("--linear-thr", action="store_true",
                         help="linearly spaced thresholds (default: log)")
    p_sweep.add_argument("--segments", type=_positive(int), nargs="+",
                         default=[10])
    p_sweep.add_argument("--levels", type=_positive(int), default=1)
    p_sweep.add_argument("--report", default=None,
                         help="CSV output path (default: stdout)")
    return parser


def _cmd_gen(args) -> int:
    signal = synth_eeg(args.duration, args.rate, args.seed)
    write_signal(signal, args.output, args.format)
    return 0


def _cmd_compress(args) -> int:
    signal = read_signal(args.input, args.format, args.rate)
    if args.ts is not None:
        num_segments = segments_for_sampling_time(signal.sample_rate,
                                                  len(signal), args.ts)
    else:
        num_segments = args.segments or 1
    config = PipelineConfig(TransformKind(args.transform),
                            CodecKind(args.codec), args.thr,
                            args.levels, num_segments)
    report, blob, _ = evaluate_run(signal, config, args.ts)
    with open(args.output, "wb") as fh:
        fh.write(blob)
    payload = report.to_dict()
    payload["dwt_levels"] = args.levels
    if args.ts is not None:
        payload["ts_s"] = args.ts
        payload["feasible"] = bool(args.ts >= report.t_min)
    print(json.dumps(payload))
    return 0


def _cmd_decompress(args) -> int:
    with open(args.input, "rb") as fh:
        blob = fh.read()
    signal, timings = decompress(deserialize(blob))
    write_signal(signal, args.output, args.format)
    print(json.dumps({
        "samples": len(signal),
        "sample_rate": signal.sample_rate,
        "t_ilossless_s": timings.t_ilossless,
        "t_ilossy_s": timings.t_ilossy,
        "t_reconst_s": timings.t_ilossless + timings.t_ilossy,
    }))
    return 0


def _cmd_sweep(args) -> int:
    if args.thr_min > args.thr_max:
        print("bzp sweep: error: --thr-min exceeds --thr-max", file=sys.stderr)
        return 2
    combos = tuple(
        (t, c) for t, c in ALL_COMBOS
        if (args.transform is None or t.value == args.transform)
        and (args.codec is None or c.value == args.codec)
    )
    spec = SweepSpec(
        thresholds=default_thresholds(args.thr_min, args.thr_max,
                                      args.thr_points, args.linear_thr),
        segment_counts=tuple(args.segments),
        combos=combos,
        dwt_levels=args.levels,
        input_path=args.input,
        input_format=args.format,
        sample_rate=args.rate,
        synth_duration_s=args.duration,
        seed=args.seed,
    )
    rows = run_sweep(spec.load_signal(), spec)
    if args.report is None:
        write_report_csv(rows, sys.stdout)
    else:
        write_report_csv_path(rows, args.report)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "compress": _cmd_compress,
    "decompress": _cmd_decompress,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (CodecError, ValueError, OSError) as exc:
        print(f"bzp {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
