"""SplitMix64, the portable generator behind random graphs and random tie-breaking.

Reference: Steele, Lea & Flood, "Fast splittable pseudorandom number
generators" (OOPSLA 2014); identical to ``splitmix64.c`` by Sebastiano Vigna.
Seed 0 yields 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F, ...
Every stream in this package is pinned to this algorithm so that random
graphs and tie choices replay bit-for-bit on any platform.
"""

from __future__ import annotations

import hashlib

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        """Integer in ``[0, bound)`` by plain modulo reduction."""
        if bound < 1:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


def derive_seed(master: int, *coords: object) -> int:
    """Child seed: first 8 bytes (little-endian) of BLAKE2b over ``"master:c1:c2:..."``.

    Floats are rendered with ``repr`` so ``0.3`` and ``0.30000000000000004``
    stay distinct.
    """
    key = ":".join([str(master), *(repr(c) if isinstance(c, float) else str(c) for c in coords)])
    digest = hashlib.blake2b(key.encode("ascii"), digest_size=8).digest()
    return int.from_bytes(digest, "little")
