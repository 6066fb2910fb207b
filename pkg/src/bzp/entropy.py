"""Lossless back-end codecs for coefficient streams.

Two codecs share the :class:`EncodedPayload` envelope:

* ``rle`` -- zero-run encoding. Thresholded coefficient blocks are mostly
  zeros, and nonzero doubles essentially never repeat, so each nonzero value
  is stored once, prefixed by the length of the zero run before it.
  Layout: varint token count, then per token (varint zero_run, 8-byte
  little-endian binary64 value), then varint trailing zero count. Varints
  are unsigned LEB128.
* ``arith`` -- the coefficients are serialized to little-endian binary64
  bytes and compressed with the adaptive byte-level arithmetic coder in
  :mod:`bzp._arithcoder`.

Both codecs invert bit-exactly, including signed zeros and subnormals. A
zero run covers only the +0.0 bit pattern; -0.0 is carried as a token value
so it survives the round trip.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass

import numpy as np

from .errors import PayloadError


class CodecKind(str, enum.Enum):
    RLE = "rle"
    ARITH = "arith"


@dataclass
class TokenStream:
    """Zero-run token view of a coefficient sequence.

    Each token is ``(zero_run, value)``: the number of +0.0 coefficients
    preceding a stored value. ``trailing_zeros`` counts +0.0 coefficients
    after the last token.
    """

    tokens: list[tuple[int, float]]
    trailing_zeros: int

    def coefficient_count(self) -> int:
        return sum(run + 1 for run, _ in self.tokens) + self.trailing_zeros


@dataclass
class EncodedPayload:
    """Entropy-coded bytes plus the metadata needed to decode standalone."""

    codec: CodecKind
    data: bytes
    decoded_length: int

    def __post_init__(self) -> None:
        self.codec = CodecKind(self.codec)
        if self.decoded_length < 0:
            raise ValueError("decoded_length must be >= 0")


def _as_coefficients(values) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.float64).reshape(-1)
    if not np.isfinite(arr).all():
        raise ValueError("coefficients must be finite")
    return arr


def tokenize(coefficients) -> TokenStream:
    arr = _as_coefficients(coefficients)
    nonzero = np.flatnonzero(arr.view(np.uint64) != 0)
    if nonzero.size == 0:
        return TokenStream([], int(arr.size))
    runs = np.empty(nonzero.size, dtype=np.int64)
    runs[0] = nonzero[0]
    runs[1:] = np.diff(nonzero) - 1
    tokens = list(zip(runs.tolist(), arr[nonzero].tolist()))
    return TokenStream(tokens, int(arr.size - 1 - nonzero[-1]))


def _append_varint(out: bytearray, value: int) -> None:
    while value >= 0x80:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    out.append(value)


def _read_varint(buf: bytes, pos: int) -> tuple[int, int]:
    result = 0
    shift = 0
    for _ in range(10):  # 10 bytes bound a 64-bit value
        if pos >= len(buf):
            raise PayloadError("truncated varint")
        byte = buf[pos]
        pos += 1
        result |= (byte & 0x7F) << shift
        if byte < 0x80:
            return result, pos
        shift += 7
    raise PayloadError("varint longer than 10 bytes")


def rle_encode(coefficients) -> EncodedPayload:
    arr = _as_coefficients(coefficients)
    nonzero = np.flatnonzero(arr.view(np.uint64) != 0)
    out = bytearray()
    _append_varint(out, int(nonzero.size))
    if nonzero.size:
        runs = np.empty(nonzero.size, dtype=np.uint64)
        runs[0] = nonzero[0]
        runs[1:] = np.diff(nonzero) - 1
        values = np.ascontiguousarray(arr[nonzero], dtype="<f8")
        if runs.size and int(runs.max()) < 0x80:
            # common case: every varint is one byte, build tokens in bulk
            tok = np.empty((runs.size, 9), dtype=np.uint8)
            tok[:, 0] = runs
            tok[:, 1:] = values.view(np.uint8).reshape(-1, 8)
            out += tok.tobytes()
        else:
            for run, vbytes in zip(runs.tolist(),
                                   values.view(np.uint8).reshape(-1, 8)):
                _append_varint(out, run)
                out += vbytes.tobytes()
        trailing = int(arr.size - 1 - nonzero[-1])
    else:
        trailing = int(arr.size)
    _append_varint(out, trailing)
    return EncodedPayload(CodecKind.RLE, bytes(out), int(arr.size))


def rle_decode(payload: EncodedPayload) -> np.ndarray:
    if payload.codec is not CodecKind.RLE:
        raise ValueError(f"payload codec is {payload.codec.value}, not rle")
    buf = payload.data
    n = payload.decoded_length
    out = np.zeros(n, dtype=np.float64)
    token_count, pos = _read_varint(buf, 0)
    cursor = -1  # index of the previous nonzero value
    unpack = struct.unpack_from
    for _ in range(token_count):
        run, pos = _read_varint(buf, pos)
        if pos + 8 > len(buf):
            raise PayloadError("truncated token value")
        cursor += run + 1
        if cursor >= n:
            raise PayloadError(
                f"token count inconsistent with decoded_length {n}"
            )
        out[cursor] = unpack("<d", buf, pos)[0]
        pos += 8
    trailing, pos = _read_varint(buf, pos)
    if pos != len(buf):
        raise PayloadError(f"overlong payload: {len(buf) - pos} trailing bytes")
    if cursor + 1 + trailing != n:
        raise PayloadError(
            f"token count inconsistent with decoded_length {n}"
        )
    return out


def arith_encode(coefficients) -> EncodedPayload:
    from . import _arithcoder

    arr = _as_coefficients(coefficients)
    raw = np.frombuffer(arr.astype("<f8", copy=False).tobytes(), dtype=np.uint8)
    encoded = _arithcoder.encode_bytes(raw)
    return EncodedPayload(CodecKind.ARITH, encoded.tobytes(), int(arr.size))


def arith_decode(payload: EncodedPayload) -> np.ndarray:
    from . import _arithcoder

    if payload.codec is not CodecKind.ARITH:
        raise ValueError(f"payload codec is {payload.codec.value}, not arith")
    raw = np.frombuffer(payload.data, dtype=np.uint8)
    decoded, status = _arithcoder.decode_bytes(raw, payload.decoded_length * 8)
    if status == _arithcoder.ENDED_EARLY:
        raise PayloadError(
            f"stream ended after {decoded.size} of "
            f"{payload.decoded_length * 8} bytes"
        )
    if status == _arithcoder.MISSING_EOF:
        raise PayloadError("no end-of-stream symbol after the declared bytes")
    return np.frombuffer(decoded.tobytes(), dtype="<f8").astype(np.float64)


def encode(coefficients, codec: CodecKind) -> EncodedPayload:
    if CodecKind(codec) is CodecKind.RLE:
        return rle_encode(coefficients)
    return arith_encode(coefficients)


def decode(payload: EncodedPayload) -> np.ndarray:
    if payload.codec is CodecKind.RLE:
        return rle_decode(payload)
    return arith_decode(payload)
