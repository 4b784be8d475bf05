"""Deterministic pseudo-random primitives.

The bit streams produced here are part of the reproducibility contract:
experiment records are replayed from fixed seeds, so the generators are
implemented locally instead of relying on library RNGs whose streams may
change between versions.

Two primitives are provided:

* SplitMix64, used in counter mode to expand one 64-bit seed into
  arbitrarily many independent stream seeds (``splitmix64_at``).
* xoshiro256**, the generator behind Bernoulli matrix sampling and any
  seeded shuffling.  A scalar class and a row-vectorized variant (one
  independent stream per matrix row, advanced in lockstep with numpy)
  share the same per-stream bit sequence.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def splitmix64_mix(z: int) -> int:
    """The SplitMix64 output mix of a 64-bit state value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return (z ^ (z >> 31)) & MASK64


def splitmix64_at(seed: int, index: int) -> int:
    """Output ``index`` of the SplitMix64 stream started at ``seed``.

    Counter mode: output i is mix(seed + (i+1)*GOLDEN), so streams can be
    extended without recomputing earlier outputs.
    """
    return splitmix64_mix((seed + (index + 1) * _GOLDEN) & MASK64)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256StarStar:
    """Scalar xoshiro256**, state expanded from a 64-bit seed via SplitMix64."""

    def __init__(self, seed: int):
        s = [splitmix64_at(seed, i) for i in range(4)]
        if not any(s):
            s[0] = _GOLDEN  # all-zero state is the one forbidden state
        self._s = s

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n) via the multiply-shift reduction."""
        return (self.next_u64() * n) >> 64

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]


# -- vectorized per-row streams ------------------------------------------

_U64 = np.uint64


def _vec_mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> _U64(30))) * _U64(_MIX1)
    z = (z ^ (z >> _U64(27))) * _U64(_MIX2)
    return z ^ (z >> _U64(31))


def _vec_rotl(x: np.ndarray, k: int) -> np.ndarray:
    return (x << _U64(k)) | (x >> _U64(64 - k))


def _row_states(seed: int, n_rows: int) -> list[np.ndarray]:
    """xoshiro256** states for rows 0..n_rows-1.

    Row x's stream seed is SplitMix64 output x of the stream seeded by
    ``seed``; its four state words are SplitMix64 outputs 0..3 of the
    stream seeded by that stream seed.
    """
    idx = np.arange(1, n_rows + 1, dtype=np.uint64)
    stream_seeds = _vec_mix(_U64(seed & MASK64) + idx * _U64(_GOLDEN))
    s = [
        _vec_mix(stream_seeds + _U64(((i + 1) * _GOLDEN) & MASK64))
        for i in range(4)
    ]
    dead = (s[0] | s[1] | s[2] | s[3]) == 0
    if dead.any():  # forbidden all-zero state; same escape as the scalar class
        s[0] = np.where(dead, _U64(_GOLDEN), s[0])
    return s


def _vec_next(s: list[np.ndarray]) -> np.ndarray:
    s0, s1, s2, s3 = s
    result = _vec_rotl(s1 * _U64(5), 7) * _U64(9)
    t = s1 << _U64(17)
    s2 = s2 ^ s0
    s3 = s3 ^ s1
    s1 = s1 ^ s2
    s0 = s0 ^ s3
    s2 = s2 ^ t
    s3 = _vec_rotl(s3, 45)
    s[:] = [s0, s1, s2, s3]
    return result


def bernoulli_bits(n_rows: int, n_cols: int, p: float, seed: int) -> np.ndarray:
    """(n_rows, n_cols) boolean array, each cell True with probability p.

    Cell (x, y) is draw y of row x's xoshiro256** stream (see
    ``_row_states``), thresholded against floor(p * 2**64); iterating rows
    in order therefore enumerates the draws in row-major order.  The array
    is a pure function of (n_rows, n_cols, p, seed).
    """
    if p <= 0.0:
        return np.zeros((n_rows, n_cols), dtype=bool)
    if p >= 1.0:
        return np.ones((n_rows, n_cols), dtype=bool)
    threshold = _U64(int(p * 2.0**64))
    states = _row_states(seed, n_rows)
    out = np.empty((n_rows, n_cols), dtype=bool)
    for y in range(n_cols):
        out[:, y] = _vec_next(states) < threshold
    return out
