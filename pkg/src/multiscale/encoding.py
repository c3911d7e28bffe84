"""Recursive multi-scale pattern encoding of an integer property.

Level 1 packs the base indicator of ``B = 2**t`` consecutive integers into a
``B``-bit word, most significant bit first.  Level ``k + 1`` packs the
level-``k`` filter applied to ``B`` consecutive level-``k`` words.  Block
indices are 0-based, integers are 1-based: level-1 block ``n`` covers
``B*n + 1 .. B*n + B``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigurationError, RangeError

_DTYPES = {2: np.uint8, 3: np.uint8, 4: np.uint16, 5: np.uint32, 6: np.uint64}


def nonzero(values):
    """Default level filter: a sub-block is flagged when its pattern is non-zero."""
    return np.asarray(values) != 0


@dataclass(frozen=True)
class EncodingParams:
    """Block width exponent ``t``, number of levels and interval end ``n_max``."""

    n_max: int
    levels: int = 3
    t: int = 3

    def __post_init__(self):
        if self.t not in _DTYPES:
            raise ConfigurationError(f"t must be in 2..6, got {self.t}")
        if self.levels < 1:
            raise ConfigurationError(f"levels must be >= 1, got {self.levels}")
        if self.n_max < 1 or self.n_max % self.block_size ** self.levels:
            raise ConfigurationError(
                f"n_max={self.n_max} is not a positive multiple of "
                f"{self.block_size}**{self.levels}={self.block_size ** self.levels}"
            )

    @property
    def block_size(self) -> int:
        return 1 << self.t

    @property
    def dtype(self):
        return np.dtype(_DTYPES[self.t])

    @property
    def max_pattern(self) -> int:
        return (1 << self.block_size) - 1

    def length(self, level: int) -> int:
        """Number of blocks at ``level`` over ``[1, n_max]``."""
        return self.n_max // self.block_size ** level

    @classmethod
    def covering(cls, n: int, levels: int = 3, t: int = 3) -> "EncodingParams":
        """Smallest valid parameters whose interval contains ``[1, n]``."""
        span = (1 << t) ** levels
        return cls(n_max=-(-n // span) * span, levels=levels, t=t)


@dataclass(frozen=True)
class PropertyChain:
    """Base predicate ``phi0`` plus one vectorised filter per level transition.

    ``filters[k - 1]`` maps level-``k`` pattern values to booleans; levels
    beyond the supplied filters use :func:`nonzero`.  ``indicator`` is an
    optional bulk form of ``phi0`` returning a boolean array for ``1..n_max``.
    """

    name: str
    phi0: Callable[[int], bool]
    filters: tuple = ()
    indicator: Callable[[int], np.ndarray] | None = None

    def phi(self, k: int) -> Callable:
        if k < 1:
            raise ValueError("level filters are indexed from 1")
        if k <= len(self.filters):
            return self.filters[k - 1]
        return nonzero

    def base_values(self, n_max: int) -> np.ndarray:
        if self.indicator is not None:
            values = np.asarray(self.indicator(n_max), dtype=bool)
            if values.shape != (n_max,):
                raise ConfigurationError(
                    f"indicator for {self.name!r} returned shape {values.shape}, expected ({n_max},)"
                )
            return values
        return np.fromiter((bool(self.phi0(i)) for i in range(1, n_max + 1)), dtype=bool, count=n_max)


@dataclass(frozen=True, eq=False)
class LevelSequence:
    level: int
    values: np.ndarray

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __eq__(self, other):
        if not isinstance(other, LevelSequence):
            return NotImplemented
        return (
            self.level == other.level
            and self.values.dtype == other.values.dtype
            and np.array_equal(self.values, other.values)
        )


@dataclass(frozen=True, eq=False)
class Hierarchy:
    """All level sequences ``1..K`` of one property chain over ``[1, n_max]``."""

    params: EncodingParams
    tag: str
    levels: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.levels) != self.params.levels:
            raise ConfigurationError(
                f"expected {self.params.levels} levels, got {len(self.levels)}"
            )
        for k, seq in enumerate(self.levels, start=1):
            if seq.level != k or len(seq) != self.params.length(k):
                raise ConfigurationError(f"level {k} has wrong index or length")

    @property
    def n_max(self) -> int:
        return self.params.n_max

    @property
    def depth(self) -> int:
        return self.params.levels

    def level(self, k: int) -> LevelSequence:
        if not 1 <= k <= self.depth:
            raise RangeError(f"level {k} not in 1..{self.depth}")
        return self.levels[k - 1]

    def __getitem__(self, k: int) -> np.ndarray:
        return self.level(k).values

    def __eq__(self, other):
        if not isinstance(other, Hierarchy):
            return NotImplemented
        return self.params == other.params and self.tag == other.tag and all(
            a == b for a, b in zip(self.levels, other.levels)
        )


def _weights(block_size: int, dtype) -> np.ndarray:
    return (np.ones(block_size, dtype=np.uint64) << np.arange(block_size - 1, -1, -1, dtype=np.uint64)).astype(dtype)


def pack_flags(flags: np.ndarray, t: int = 3) -> np.ndarray:
    """Pack a boolean array (length multiple of ``2**t``) into patterns, MSB first."""
    block_size = 1 << t
    flags = np.asarray(flags, dtype=bool)
    if flags.size % block_size:
        raise ConfigurationError(f"flag count {flags.size} is not a multiple of {block_size}")
    if t == 3:
        return np.packbits(flags)
    dtype = _DTYPES[t]
    grid = flags.reshape(-1, block_size).astype(dtype)
    return (grid * _weights(block_size, dtype)).sum(axis=1, dtype=dtype)


def encode_level1(phi0: Callable[[int], bool], n: int, params: EncodingParams | None = None) -> int:
    """Pattern of block ``n``: bit ``B-1-j`` is ``phi0(B*n + 1 + j)``."""
    if n < 0:
        raise RangeError(f"block index must be >= 0, got {n}")
    block_size = params.block_size if params is not None else 8
    value = 0
    for j in range(block_size):
        if phi0(block_size * n + 1 + j):
            value |= 1 << (block_size - 1 - j)
    return value


def encode_next_level(prev: LevelSequence | Sequence[int], phi_k: Callable, n: int, t: int = 3) -> int:
    """Pattern of the level above ``prev`` at block ``n``."""
    values = prev.values if isinstance(prev, LevelSequence) else np.asarray(prev)
    block_size = 1 << t
    if n < 0 or block_size * (n + 1) > len(values):
        raise RangeError(f"block {n} needs indices up to {block_size * (n + 1) - 1}, have {len(values)}")
    value = 0
    for j in range(block_size):
        if bool(phi_k(values[block_size * n + j])):
            value |= 1 << (block_size - 1 - j)
    return value


def next_level(values: np.ndarray, phi_k: Callable, t: int = 3) -> np.ndarray:
    """Vectorised :func:`encode_next_level` over a whole level."""
    flags = np.asarray(phi_k(values), dtype=bool)
    if flags.shape != values.shape:
        raise ConfigurationError("level filter must be elementwise")
    return pack_flags(flags, t)


def build_hierarchy(chain: PropertyChain, params: EncodingParams) -> Hierarchy:
    """Materialise every level of ``chain`` over ``[1, params.n_max]``."""
    values = pack_flags(chain.base_values(params.n_max), params.t).astype(params.dtype, copy=False)
    seqs = [values]
    for k in range(1, params.levels):
        seqs.append(next_level(seqs[-1], chain.phi(k), params.t).astype(params.dtype, copy=False))
    levels = []
    for k, arr in enumerate(seqs, start=1):
        arr.setflags(write=False)
        levels.append(LevelSequence(k, arr))
    return Hierarchy(params, chain.name, tuple(levels))


def popcount(value: int) -> int:
    """Number of set bits of a pattern (property density of the block)."""
    return int(value).bit_count()


def popcount_array(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(np.asarray(values))


def d2b(value: int, t: int = 3) -> tuple[int, ...]:
    """Positions ``j`` (0 = most significant) of the set bits of ``value``."""
    block_size = 1 << t
    value = int(value)
    return tuple(j for j in range(block_size) if (value >> (block_size - 1 - j)) & 1)


def block_range(level: int, index: int, params: EncodingParams | None = None) -> tuple[int, int]:
    """Closed integer interval covered by block ``index`` at ``level``."""
    if level < 1 or index < 0:
        raise RangeError(f"need level >= 1 and index >= 0, got ({level}, {index})")
    span = (params.block_size if params is not None else 8) ** level
    return span * index + 1, span * (index + 1)
