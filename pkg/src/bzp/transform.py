"""Orthonormal transforms (DCT-II, Haar DWT) and relative thresholding.

Both transforms preserve energy (Parseval) and invert exactly, so the only
loss in the pipeline comes from :func:`threshold`, which zeroes every
coefficient whose magnitude is at most ``thr`` times the largest magnitude
in the block.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.fft import dct as _scipy_dct, idct as _scipy_idct


class TransformKind(str, enum.Enum):
    DCT = "dct"
    DWT = "dwt"


@dataclass
class CoefficientBlock:
    """Dense transform-domain coefficients for one segment.

    ``original_length`` is the (possibly padded) input length of the forward
    transform; ``dwt_levels`` is 0 for DCT blocks and >= 1 for DWT blocks,
    where it gives the decomposition depth.
    """

    transform: TransformKind
    coefficients: np.ndarray
    original_length: int
    dwt_levels: int = 0

    def __post_init__(self) -> None:
        self.transform = TransformKind(self.transform)
        self.coefficients = np.asarray(self.coefficients, dtype=np.float64).reshape(-1)
        if self.coefficients.size != self.original_length:
            raise ValueError(
                f"coefficient count {self.coefficients.size} does not match "
                f"original_length {self.original_length}"
            )
        if not np.isfinite(self.coefficients).all():
            raise ValueError("coefficients must be finite")
        if self.transform is TransformKind.DWT:
            if self.dwt_levels < 1:
                raise ValueError("DWT blocks need dwt_levels >= 1")
            if self.original_length % (1 << self.dwt_levels) != 0:
                raise ValueError(
                    f"length {self.original_length} is not divisible by "
                    f"2^{self.dwt_levels}"
                )


@dataclass(frozen=True)
class ThresholdSpec:
    """Relative threshold: the cut ratio against the largest |coefficient|."""

    thr: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.thr) and 0.0 <= self.thr <= 1.0):
            raise ValueError(f"thr must be in [0, 1], got {self.thr}")


_SQRT2 = math.sqrt(2.0)


def dct_forward(segment: np.ndarray) -> CoefficientBlock:
    """Orthonormal DCT-II:

    Y(u) = sqrt(2/N) * a(u) * sum_x f(x) * cos(pi*(2x+1)*u / 2N),
    a(0) = 1/sqrt(2), a(u>0) = 1.
    """
    x = np.asarray(segment, dtype=np.float64).reshape(-1)
    if x.size == 0:
        raise ValueError("cannot transform an empty segment")
    coeffs = _scipy_dct(x, type=2, norm="ortho")
    return CoefficientBlock(TransformKind.DCT, coeffs, x.size)


def dct_inverse(block: CoefficientBlock) -> np.ndarray:
    if block.transform is not TransformKind.DCT:
        raise ValueError(f"expected a DCT block, got {block.transform.value}")
    return _scipy_idct(block.coefficients, type=2, norm="ortho")


def dwt_forward(segment: np.ndarray, levels: int = 1) -> CoefficientBlock:
    """Multi-level Haar analysis.

    One level maps sample pairs to C_A(m) = (S(2m) + S(2m+1)) / sqrt(2) and
    C_D(m) = (S(2m) - S(2m+1)) / sqrt(2); the approximation band is
    re-analyzed recursively. Output layout is [A_L | D_L | ... | D_1]
    (coarsest first).
    """
    x = np.asarray(segment, dtype=np.float64).reshape(-1)
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    if x.size == 0 or x.size % (1 << levels) != 0:
        raise ValueError(
            f"segment length {x.size} is not divisible by 2^{levels}"
        )
    details = []
    approx = x
    for _ in range(levels):
        even, odd = approx[0::2], approx[1::2]
        details.append((even - odd) / _SQRT2)
        approx = (even + odd) / _SQRT2
    coeffs = np.concatenate([approx] + details[::-1])
    return CoefficientBlock(TransformKind.DWT, coeffs, x.size, levels)


def dwt_inverse(block: CoefficientBlock) -> np.ndarray:
    if block.transform is not TransformKind.DWT:
        raise ValueError(f"expected a DWT block, got {block.transform.value}")
    coeffs = block.coefficients
    levels = block.dwt_levels
    width = block.original_length >> levels
    approx = coeffs[:width]
    pos = width
    for _ in range(levels):
        detail = coeffs[pos:pos + width]
        pos += width
        out = np.empty(2 * width)
        out[0::2] = (approx + detail) / _SQRT2
        out[1::2] = (approx - detail) / _SQRT2
        approx = out
        width *= 2
    return approx


def threshold(block: CoefficientBlock,
              spec: ThresholdSpec) -> tuple[CoefficientBlock, int]:
    """Zero every coefficient with |c| / max|c| <= thr.

    The comparison is strict ("keep if ratio > thr"), so boundary ties are
    zeroed and thr = 1 clears the whole block. An all-zero block passes
    through unchanged with a retained count of 0.
    """
    c = block.coefficients
    peak = float(np.max(np.abs(c)))
    if peak == 0.0:
        kept = c.copy()
    else:
        kept = np.where(np.abs(c) / peak > spec.thr, c, 0.0)
    out = CoefficientBlock(block.transform, kept, block.original_length,
                           block.dwt_levels)
    return out, int(np.count_nonzero(kept))
