"""Regenerates rng_seed42.json from a standalone reimplementation of the
counter-based generator (SplitMix64 finalizer plus Box-Muller pairs)."""

import json
import math
from pathlib import Path

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def stream(seed, index):
    key = mix64(seed ^ mix64((index + GOLDEN) & MASK))
    counter = 0
    while True:
        counter += 1
        yield mix64((key + counter * GOLDEN) & MASK)


def normals(seed, index):
    bits = stream(seed, index)
    while True:
        u1 = ((next(bits) >> 11) + 1) * 2.0**-53
        u2 = (next(bits) >> 11) * 2.0**-53
        r = math.sqrt(-2.0 * math.log(u1))
        yield r * math.cos(2.0 * math.pi * u2)
        yield r * math.sin(2.0 * math.pi * u2)


def main():
    words = [str(w) for w, _ in zip(stream(42, 0), range(8))]
    samples = []
    for i in range(5):
        g = normals(42, i)
        samples.append([next(g) for _ in range(4)])
    doc = {"seed": 42, "stream0_words": words, "sym222_samples": samples}
    out = Path(__file__).with_name("rng_seed42.json")
    out.write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
