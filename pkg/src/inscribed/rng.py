"""Counter-based uniform variates.

Every Monte Carlo trial owns a private stream so results do not depend on
how trials are split between workers.  With ``M`` the SplitMix64 finaliser

    M(z) = z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
           z ^= z >> 27; z *= 0x94D049BB133111EB
           z ^= z >> 31                                   (all mod 2**64)

and ``G = 0x9E3779B97F4A7C15``, trial ``i`` of a run seeded with ``seed`` has

    key(seed, i) = M(M(seed) + i * G)
    word(seed, i, k) = M(key(seed, i) + (k + 1) * G)
    uniform(seed, i, k) = (word >> 11) * 2**-53             in [0, 1)

i.e. draw ``k`` is output ``k`` of a SplitMix64 generator seeded with the
trial key.  These constants are part of the reproducibility contract.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

_U30, _U27, _U31, _U11 = (np.uint64(n) for n in (30, 27, 31, 11))
_MIX1 = np.uint64(MIX1)
_MIX2 = np.uint64(MIX2)
_GOLDEN = np.uint64(GOLDEN)
_SCALE = 2.0**-53


def mix64_int(z: int) -> int:
    """Pure-int SplitMix64 finaliser (reference for the array version)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def mix64(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> _U30)
    z = z * _MIX1
    z = z ^ (z >> _U27)
    z = z * _MIX2
    return z ^ (z >> _U31)


def trial_keys(seed: int, start: int, stop: int) -> np.ndarray:
    """Stream keys for trials ``start <= i < stop``."""
    base = np.uint64(mix64_int(seed & MASK64))
    idx = np.arange(start, stop, dtype=np.uint64)
    return mix64(base + idx * _GOLDEN)


def uniforms(keys: np.ndarray, k: int) -> np.ndarray:
    """Draw ``k`` (0-based) from each stream in ``keys``."""
    step = np.uint64(((k + 1) * GOLDEN) & MASK64)
    return (mix64(keys + step) >> _U11).astype(np.float64) * _SCALE


def uniform_int(seed: int, i: int, k: int) -> float:
    """Scalar reference implementation of :func:`uniforms`."""
    key = mix64_int((mix64_int(seed) + i * GOLDEN) & MASK64)
    word = mix64_int((key + (k + 1) * GOLDEN) & MASK64)
    return (word >> 11) * _SCALE
