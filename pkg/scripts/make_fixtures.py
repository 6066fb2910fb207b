#!/usr/bin/env python3
"""Regenerate the frozen test fixtures under tests/data/.

The outputs are deterministic, so rerunning this script must be a no-op
unless the wire formats changed (which is a breaking format change and
should be treated as such).
"""

from pathlib import Path

import bzp

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

# Coefficient vector exercising zero runs, negatives, a subnormal, a long
# (multi-byte varint) run, and trailing zeros. Mirrored in the tests.
GOLDEN_COEFFS = (
    [0.0, 0.0, 1.5, 0.0, -2.25, 5e-324]
    + [0.0] * 200
    + [3.75e-5, 0.0, 0.0]
)


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)

    fixture = bzp.synth_eeg(60.0, 256.0, 42)
    bzp.write_signal(fixture, DATA / "eeg_60s_256hz_seed42.f64", "raw")

    rle = bzp.rle_encode(GOLDEN_COEFFS)
    (DATA / "golden_rle.bin").write_bytes(rle.data)
    arith = bzp.arith_encode(GOLDEN_COEFFS)
    (DATA / "golden_arith.bin").write_bytes(arith.data)

    signal = bzp.synth_eeg(1.0, 256.0, 7)
    config = bzp.PipelineConfig("dct", "rle", 0.02, num_segments=2)
    compressed, _ = bzp.compress(signal, config)
    (DATA / "golden_container.bzp").write_bytes(bzp.serialize(compressed))

    for name in ("eeg_60s_256hz_seed42.f64", "golden_rle.bin",
                 "golden_arith.bin", "golden_container.bzp"):
        print(f"{name}: {(DATA / name).stat().st_size} bytes")


if __name__ == "__main__":
    main()
