"""Pinned deterministic randomness for reproducible fixtures.

Seeded graphs, permutations, and arrangements must be bit-identical across
platforms and interpreter versions, so this module implements its own
generator instead of relying on ``random``: SplitMix64 (a 64-bit
counter-based generator with a bijective output mix), bounded draws by
rejection sampling, and a Fisher-Yates shuffle walking indices downward.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 stream. Same seed, same platform-independent sequence."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self._state = seed

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound), rejection-sampled to avoid modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        # Accept only draws below the largest multiple of `bound` that fits.
        limit = ((_MASK64 + 1) // bound) * bound
        while True:
            u = self.next_u64()
            if u < limit:
                return u % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle, descending index order."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, size: int) -> tuple[int, ...]:
        """Uniform random permutation of 0..size-1."""
        items = list(range(size))
        self.shuffle(items)
        return tuple(items)
