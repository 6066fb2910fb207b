"""Adaptive order-0 arithmetic coder over bytes (jitted hot loops).

Classic integer implementation: 32-bit low/high registers, E1/E2
renormalization emitting bits MSB-first, E3 underflow handled with a pending
counter. The model is a 257-symbol frequency table (256 byte values plus an
end-of-stream symbol), all counts starting at 1 and incremented by 1 per
occurrence; when the total exceeds 2^14 every count is halved (floor, min 1).
The decoder replays the identical model, so the coder is a bijection.

All state is explicit unsigned integer arithmetic; output depends only on the
input bytes, never on the platform.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64

ALPHABET = 257
EOF_SYMBOL = 256
FREQ_CAP = 1 << 14

_FULL = 1 << 32
_MASK = _FULL - 1          # 32 ones
_TOP = _FULL >> 1          # top bit
_SECOND = _FULL >> 2       # second-highest bit

# Decoder status codes.
OK = 0
ENDED_EARLY = 1            # end-of-stream symbol arrived before the declared count
MISSING_EOF = 2            # declared count decoded but no end-of-stream follows


@njit(cache=True)
def encode_bytes(data):  # pragma: no cover - exercised via entropy tests
    n = data.size
    # <= 14 bits per symbol (log2 of the frequency cap) plus flush slack.
    out = np.empty(2 * n + 80, dtype=np.uint8)
    pos = 0
    cur = 0
    nbits = 0
    freq = np.ones(ALPHABET, dtype=np.uint32)
    total = ALPHABET
    low = uint64(0)
    high = uint64(_MASK)
    pending = 0
    for i in range(n + 1):
        s = EOF_SYMBOL if i == n else int(data[i])
        cumlo = 0
        for j in range(s):
            cumlo += freq[j]
        cumhi = cumlo + freq[s]
        rng = high - low + uint64(1)
        high = low + rng * uint64(cumhi) // uint64(total) - uint64(1)
        low = low + rng * uint64(cumlo) // uint64(total)
        while True:
            if (low ^ high) & uint64(_TOP) == uint64(0):
                bit = int(low >> 31)
                cur = (cur << 1) | bit
                nbits += 1
                if nbits == 8:
                    out[pos] = cur
                    pos += 1
                    cur = 0
                    nbits = 0
                invb = bit ^ 1
                for _ in range(pending):
                    cur = (cur << 1) | invb
                    nbits += 1
                    if nbits == 8:
                        out[pos] = cur
                        pos += 1
                        cur = 0
                        nbits = 0
                pending = 0
                low = (low << uint64(1)) & uint64(_MASK)
                high = ((high << uint64(1)) & uint64(_MASK)) | uint64(1)
            elif low & ~high & uint64(_SECOND) != uint64(0):
                pending += 1
                low = (low << uint64(1)) & uint64(_MASK >> 1)
                high = (((high << uint64(1)) & uint64(_MASK >> 1))
                        | uint64(_TOP) | uint64(1))
            else:
                break
        if s != EOF_SYMBOL:
            freq[s] += 1
            total += 1
            if total > FREQ_CAP:
                total = 0
                for j in range(ALPHABET):
                    f = freq[j] >> 1
                    if f == 0:
                        f = 1
                    freq[j] = f
                    total += int(f)
    # One disambiguation bit selects the half-point of the final range, then
    # pad with zeros to a byte boundary.
    cur = (cur << 1) | 1
    nbits += 1
    if nbits == 8:
        out[pos] = cur
        pos += 1
        cur = 0
        nbits = 0
    if nbits > 0:
        out[pos] = cur << (8 - nbits)
        pos += 1
    return out[:pos].copy()


@njit(cache=True)
def decode_bytes(payload, expected):  # pragma: no cover - via entropy tests
    out = np.empty(expected, dtype=np.uint8)
    total_bits = payload.size * 8
    bitpos = 0
    freq = np.ones(ALPHABET, dtype=np.uint32)
    total = ALPHABET
    low = uint64(0)
    high = uint64(_MASK)
    code = uint64(0)
    for _ in range(32):
        b = 0
        if bitpos < total_bits:
            b = (payload[bitpos >> 3] >> (7 - (bitpos & 7))) & 1
        bitpos += 1
        code = (code << uint64(1)) | uint64(b)
    count = 0
    while True:
        rng = high - low + uint64(1)
        value = ((code - low + uint64(1)) * uint64(total) - uint64(1)) // rng
        cumlo = 0
        s = 0
        while cumlo + freq[s] <= value:
            cumlo += freq[s]
            s += 1
        cumhi = cumlo + freq[s]
        high = low + rng * uint64(cumhi) // uint64(total) - uint64(1)
        low = low + rng * uint64(cumlo) // uint64(total)
        while True:
            if (low ^ high) & uint64(_TOP) == uint64(0):
                low = (low << uint64(1)) & uint64(_MASK)
                high = ((high << uint64(1)) & uint64(_MASK)) | uint64(1)
                b = 0
                if bitpos < total_bits:
                    b = (payload[bitpos >> 3] >> (7 - (bitpos & 7))) & 1
                bitpos += 1
                code = ((code << uint64(1)) & uint64(_MASK)) | uint64(b)
            elif low & ~high & uint64(_SECOND) != uint64(0):
                low = (low << uint64(1)) & uint64(_MASK >> 1)
                high = (((high << uint64(1)) & uint64(_MASK >> 1))
                        | uint64(_TOP) | uint64(1))
                b = 0
                if bitpos < total_bits:
                    b = (payload[bitpos >> 3] >> (7 - (bitpos & 7))) & 1
                bitpos += 1
                code = ((code & uint64(_TOP))
                        | ((code << uint64(1)) & uint64(_MASK >> 1))
                        | uint64(b))
            else:
                break
        if s == EOF_SYMBOL:
            if count != expected:
                return out[:count].copy(), ENDED_EARLY
            return out, OK
        if count >= expected:
            return out, MISSING_EOF
        out[count] = s
        count += 1
        freq[s] += 1
        total += 1
        if total > FREQ_CAP:
            total = 0
            for j in range(ALPHABET):
                f = freq[j] >> 1
                if f == 0:
                    f = 1
                freq[j] = f
                total += int(f)
