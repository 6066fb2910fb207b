"""Serialized file format for compressed signals.

Layout (all multi-byte integers little-endian)::

    magic   "BZP1"           4 bytes
    version u8 = 1
    flags   u8               bit0: transform (0=DCT, 1=DWT)
                             bit1: codec     (0=RLE, 1=ARITH)
                             bits 2-7 must be zero
    levels  u8               DWT decomposition depth; 0 for DCT files
    reserved u8              must be zero
    mu      f64
    sigma   f64              must be positive and finite
    rate    f64              sample rate in Hz, positive and finite
    count   u32              number of segments, >= 1
    then per segment:
        original_length u32  pre-pad sample count, >= 1
        pad_length      u32  0 for DCT; < 2^levels for DWT
        payload_length  u32  >= 1
        payload bytes

The format is canonical: every field a reader accepts is written back
identically, so deserialize(serialize(f)) == f and serialize(deserialize(b))
== b. Compressed size is measured on these bytes, headers included.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

from .entropy import CodecKind, EncodedPayload
from .errors import ContainerError
from .preprocess import StandardizationParams
from .transform import TransformKind

MAGIC = b"BZP1"
VERSION = 1

_HEADER = struct.Struct("<4sBBBBdddI")
_SEGMENT = struct.Struct("<III")

HEADER_SIZE = _HEADER.size          # 36
SEGMENT_OVERHEAD = _SEGMENT.size    # 12

_U32_MAX = 0xFFFFFFFF


@dataclass
class CompressedSegment:
    """One entropy-coded segment plus what is needed to invert it."""

    transform: TransformKind
    codec: CodecKind
    dwt_levels: int
    pad_length: int
    original_length: int
    payload: EncodedPayload

    def __post_init__(self) -> None:
        self.transform = TransformKind(self.transform)
        self.codec = CodecKind(self.codec)
        if self.original_length < 1:
            raise ValueError("original_length must be >= 1")
        if self.pad_length < 0:
            raise ValueError("pad_length must be >= 0")
        if self.transform is TransformKind.DCT:
            if self.dwt_levels != 0:
                raise ValueError("DCT segments carry dwt_levels = 0")
            if self.pad_length != 0:
                raise ValueError("DCT segments are never padded")
        else:
            if self.dwt_levels < 1:
                raise ValueError("DWT segments need dwt_levels >= 1")
            block = 1 << self.dwt_levels
            if self.pad_length >= block:
                raise ValueError("pad_length must be < 2^dwt_levels")
            if (self.original_length + self.pad_length) % block != 0:
                raise ValueError("padded length not divisible by 2^dwt_levels")
        if self.payload.codec is not self.codec:
            raise ValueError("payload codec does not match segment codec")
        if self.payload.decoded_length != self.original_length + self.pad_length:
            raise ValueError("payload decoded_length does not match lengths")
        if len(self.payload.data) == 0:
            raise ValueError("payload must be non-empty")


@dataclass
class CompressedFile:
    """A whole compressed signal: standardization parameters plus segments.

    All segments must share one (transform, codec, dwt_levels) combination;
    the wire format stores that choice once in the header.
    """

    params: StandardizationParams
    sample_rate: float
    segments: list[CompressedSegment]

    def __post_init__(self) -> None:
        self.sample_rate = float(self.sample_rate)
        if not (math.isfinite(self.sample_rate) and self.sample_rate > 0):
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        if not self.segments:
            raise ValueError("a compressed file holds at least one segment")
        first = self.segments[0]
        for seg in self.segments[1:]:
            if (seg.transform, seg.codec, seg.dwt_levels) != (
                    first.transform, first.codec, first.dwt_levels):
                raise ValueError("segments must share transform/codec/levels")

    @property
    def transform(self) -> TransformKind:
        return self.segments[0].transform

    @property
    def codec(self) -> CodecKind:
        return self.segments[0].codec

    @property
    def dwt_levels(self) -> int:
        return self.segments[0].dwt_levels

    @property
    def segment_count(self) -> int:
        return len(self.segments)

    @property
    def sample_count(self) -> int:
        return sum(seg.original_length for seg in self.segments)


def serialize(file: CompressedFile) -> bytes:
    flags = 0
    if file.transform is TransformKind.DWT:
        flags |= 0x01
    if file.codec is CodecKind.ARITH:
        flags |= 0x02
    if not 0 <= file.dwt_levels <= 0xFF:
        raise ValueError("dwt_levels does not fit in a byte")
    if file.segment_count > _U32_MAX:
        raise ValueError("too many segments")
    out = bytearray()
    out += _HEADER.pack(MAGIC, VERSION, flags, file.dwt_levels, 0,
                        file.params.mu, file.params.sigma, file.sample_rate,
                        file.segment_count)
    for seg in file.segments:
        if seg.original_length > _U32_MAX or seg.pad_length > _U32_MAX:
            raise ValueError("segment lengths do not fit in u32")
        if len(seg.payload.data) > _U32_MAX:
            raise ValueError("payload too large for u32 length field")
        out += _SEGMENT.pack(seg.original_length, seg.pad_length,
                             len(seg.payload.data))
        out += seg.payload.data
    return bytes(out)


def deserialize(data: bytes) -> CompressedFile:
    if len(data) < HEADER_SIZE:
        raise ContainerError(
            f"truncated header: {len(data)} bytes, need {HEADER_SIZE}"
        )
    (magic, version, flags, levels, reserved, mu, sigma, rate,
     segment_count) = _HEADER.unpack_from(data, 0)
    if magic != MAGIC:
        raise ContainerError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ContainerError(f"unsupported version {version}")
    if flags & ~0x03:
        raise ContainerError(f"reserved flag bits set: {flags:#04x}")
    if reserved != 0:
        raise ContainerError("reserved header byte must be zero")
    transform = TransformKind.DWT if flags & 0x01 else TransformKind.DCT
    codec = CodecKind.ARITH if flags & 0x02 else CodecKind.RLE
    if transform is TransformKind.DCT and levels != 0:
        raise ContainerError("DCT file with nonzero dwt_levels")
    if transform is TransformKind.DWT and levels < 1:
        raise ContainerError("DWT file needs dwt_levels >= 1")
    if not (math.isfinite(mu) and math.isfinite(sigma) and math.isfinite(rate)):
        raise ContainerError("non-finite header parameters")
    if sigma <= 0:
        raise ContainerError(f"sigma must be positive, got {sigma}")
    if rate <= 0:
        raise ContainerError(f"sample_rate must be positive, got {rate}")
    if segment_count < 1:
        raise ContainerError("segment_count must be >= 1")
    pos = HEADER_SIZE
    segments = []
    for index in range(segment_count):
        if pos + SEGMENT_OVERHEAD > len(data):
            raise ContainerError(f"truncated in segment {index} header")
        original_length, pad_length, payload_length = _SEGMENT.unpack_from(
            data, pos)
        pos += SEGMENT_OVERHEAD
        if original_length < 1:
            raise ContainerError(f"segment {index}: zero original_length")
        if transform is TransformKind.DCT:
            if pad_length != 0:
                raise ContainerError(f"segment {index}: padded DCT segment")
        else:
            block = 1 << levels
            if pad_length >= block:
                raise ContainerError(
                    f"segment {index}: pad_length {pad_length} >= 2^levels"
                )
            if (original_length + pad_length) % block != 0:
                raise ContainerError(
                    f"segment {index}: padded length not divisible by 2^levels"
                )
        if payload_length < 1:
            raise ContainerError(f"segment {index}: empty payload")
        if pos + payload_length > len(data):
            raise ContainerError(f"truncated in segment {index} payload")
        payload = EncodedPayload(codec, data[pos:pos + payload_length],
                                 original_length + pad_length)
        pos += payload_length
        segments.append(CompressedSegment(transform, codec, levels,
                                          pad_length, original_length, payload))
    if pos != len(data):
        raise ContainerError(f"{len(data) - pos} trailing bytes after segments")
    try:
        params = StandardizationParams(mu, sigma)
        return CompressedFile(params, rate, segments)
    except ValueError as exc:
        raise ContainerError(str(exc)) from exc


def compressed_size(file: CompressedFile) -> int:
    """Total serialized size in bytes, headers included."""
    return len(serialize(file))
