"""bzp: hybrid lossy/lossless compression for sampled biosignals.

The pipeline standardizes a signal, splits it into segments, transforms each
segment (orthonormal DCT-II or Haar DWT), zeroes coefficients below a
relative threshold, and entropy-codes the result (zero-run RLE or adaptive
arithmetic coding). The threshold is the only lossy step. A benchmark
harness measures compression ratio, reconstruction error, and per-stage
timings across pipeline configurations.
"""

from .container import (CompressedFile, CompressedSegment, compressed_size,
                        deserialize, serialize)
from .entropy import (CodecKind, EncodedPayload, TokenStream, arith_decode,
                      arith_encode, rle_decode, rle_encode)
from .errors import (CodecError, ContainerError, DegenerateSignalError,
                     PayloadError, SignalFormatError)
from .metrics import RunReport, compression_ratio, rmse, total_time
from .pipeline import (PipelineConfig, StageTimings,
                       check_realtime_feasibility, compress, decompress)
from .preprocess import (StandardizationParams, StandardizedSegment,
                         destandardize, segment, segments_for_sampling_time,
                         standardize)
from .signal_io import RawSignal, read_signal, synth_eeg, write_signal
from .sweep import SweepSpec, default_thresholds, evaluate_run, run_sweep
from .transform import (CoefficientBlock, ThresholdSpec, TransformKind,
                        dct_forward, dct_inverse, dwt_forward, dwt_inverse,
                        threshold)

__version__ = "0.1.0"

__all__ = [
    "CodecError", "CodecKind", "CoefficientBlock", "CompressedFile",
    "CompressedSegment", "ContainerError", "DegenerateSignalError",
    "EncodedPayload", "PayloadError", "PipelineConfig", "RawSignal",
    "RunReport", "SignalFormatError", "StageTimings",
    "StandardizationParams", "StandardizedSegment", "SweepSpec",
    "ThresholdSpec", "TokenStream", "TransformKind", "arith_decode",
    "arith_encode", "check_realtime_feasibility", "compress",
    "compressed_size", "compression_ratio", "dct_forward", "dct_inverse",
    "decompress", "default_thresholds", "deserialize", "destandardize",
    "dwt_forward", "dwt_inverse", "evaluate_run", "read_signal", "rle_decode",
    "rle_encode", "rmse", "run_sweep", "segment",
    "segments_for_sampling_time", "serialize", "standardize", "synth_eeg",
    "threshold", "total_time", "write_signal",
]
