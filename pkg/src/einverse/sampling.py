"""Seeded, portable pseudo-random tensor generation.

The generator is SplitMix64 so that identical seeds reproduce identical
tensors across languages and platforms:

    state += 0x9E3779B97F4A7C15                     (mod 2^64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9        (mod 2^64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB        (mod 2^64)
    z = z ^ (z >> 31)

Doubles in [0, 1) take the top 53 bits: ``(z >> 11) * 2**-53``.  Tensor
entries are drawn in canonical linearization order, real part first, then
(for complex tensors) imaginary part, each mapped to [-1, 1).
"""

from __future__ import annotations

import numpy as np

from .tensor import Tensor

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Deterministic 64-bit generator with the constants documented above."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_double(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_symmetric(self) -> float:
        """Uniform double in [-1, 1)."""
        return 2.0 * self.next_double() - 1.0


def random_tensor(extents, split: int, seed: int, complex_entries: bool = True) -> Tensor:
    """Seeded tensor with entries uniform in [-1, 1) (plus i*[-1, 1) if complex)."""
    gen = SplitMix64(seed)
    extents = tuple(int(e) for e in extents)
    n = int(np.prod(extents)) if extents else 1
    entries = np.empty(n, dtype=np.complex128)
    for i in range(n):
        re = gen.next_symmetric()
        im = gen.next_symmetric() if complex_entries else 0.0
        entries[i] = complex(re, im)
    return Tensor.from_flat(extents, split, entries)
