"""Patterns over the sparse blocks ``2**k - 7 .. 2**k`` for odd exponents ``k``.

A level-1 block is the eight integers ending at ``2**k``.  Its even members
are composite, so only bits ``2**7, 2**5, 2**3, 2**1`` (offsets 7, 5, 3, 1)
can be set.  Level 2 aggregates eight consecutive odd exponents
``16m + 3, 16m + 5, ..., 16m + 17``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .encoding import PropertyChain, nonzero, popcount
from .errors import DomainError, RangeError
from .primality import DEFAULT_ROUNDS, is_probable_prime, sieve_flags
from .primes import PatternHistogram

OFFSETS = (7, 5, 3, 1)
# Level-1 patterns of blocks containing 2**k - 1 as a prime.
MERSENNE_PATTERNS = frozenset({2, 10, 34, 42, 130, 138, 162})
DEFAULT_K_MAX = 4001
DEFAULT_M_MAX = 500


def mersenne_filter(values):
    return np.isin(np.asarray(values), tuple(MERSENNE_PATTERNS))


def mersenne_chain() -> PropertyChain:
    """The same filters applied to the contiguous integers ``[1, n_max]``."""
    return PropertyChain("mersenne", is_probable_prime, (mersenne_filter, nonzero), indicator=sieve_flags)


@dataclass(frozen=True)
class MersenneBlock:
    exponent: int
    pattern: int
    prime_offsets: tuple

    @property
    def primes(self) -> int:
        return popcount(self.pattern)


def _check_exponent(k: int):
    if k < 3 or k % 2 == 0:
        raise DomainError(f"exponent must be odd and >= 3, got {k}")


@lru_cache(maxsize=None)
def _offset_prime(k: int, offset: int, rounds: int) -> bool:
    return is_probable_prime((1 << k) - offset, rounds)


@lru_cache(maxsize=None)
def mersenne_level1(k: int, rounds: int = DEFAULT_ROUNDS) -> MersenneBlock:
    _check_exponent(k)
    primes = tuple(o for o in OFFSETS if _offset_prime(k, o, rounds))
    return MersenneBlock(k, sum(1 << o for o in primes), primes)


def odd_exponents(k_max: int, k_min: int = 3) -> range:
    return range(k_min | 1, k_max + 1, 2)


def scan(k_max: int = DEFAULT_K_MAX, k_min: int = 3, rounds: int = DEFAULT_ROUNDS) -> list[MersenneBlock]:
    return [mersenne_level1(k, rounds) for k in odd_exponents(k_max, k_min)]


def mersenne_level1_histogram(k_max: int = DEFAULT_K_MAX, k_min: int = 3,
                              rounds: int = DEFAULT_ROUNDS) -> PatternHistogram:
    """Pattern counts over the odd exponents in ``[k_min, k_max]``."""
    if k_max < 3:
        raise DomainError(f"k_max must be >= 3, got {k_max}")
    blocks = scan(k_max, k_min, rounds)
    counts = np.bincount([b.pattern for b in blocks], minlength=256).astype(np.int64)
    return PatternHistogram(1, counts, len(blocks))


def exponents_by_pattern(k_max: int = DEFAULT_K_MAX, k_min: int = 3,
                         rounds: int = DEFAULT_ROUNDS) -> dict[int, list[int]]:
    table: dict[int, list[int]] = {}
    for block in scan(k_max, k_min, rounds):
        if block.pattern:
            table.setdefault(block.pattern, []).append(block.exponent)
    return dict(sorted(table.items()))


def _flagged(k: int, rounds: int) -> bool:
    # Every filter pattern carries the 2**k - 1 bit, so the other offsets are
    # only tested once that one is prime.
    if not _offset_prime(k, 1, rounds):
        return False
    return mersenne_level1(k, rounds).pattern in MERSENNE_PATTERNS


def mersenne_level2(m: int, k_max: int | None = None, rounds: int = DEFAULT_ROUNDS) -> int:
    """Level-2 pattern of the eight odd exponents starting at ``16m + 3``."""
    if m < 0:
        raise RangeError(f"m must be >= 0, got {m}")
    first = 16 * m + 3
    if k_max is not None and first + 14 > k_max:
        raise RangeError(f"exponents up to {first + 14} exceed k_max={k_max}")
    value = 0
    for j in range(8):
        if _flagged(first + 2 * j, rounds):
            value |= 1 << (7 - j)
    return value


def level2_table(m_max: int = DEFAULT_M_MAX, rounds: int = DEFAULT_ROUNDS) -> dict[int, int]:
    """``16m + 3 -> pattern`` for ``0 <= m <= m_max``."""
    return {16 * m + 3: mersenne_level2(m, rounds=rounds) for m in range(m_max + 1)}


@dataclass(frozen=True)
class MersenneReport:
    k_max: int
    m_max: int
    histogram: dict
    exponents: dict
    nonzero_patterns: tuple
    max_primes_from_k7: int
    offset_counts: dict
    exclusive_from_k11: bool
    exclusivity_exceptions: tuple
    level2: dict
    level2_nonempty: int
    level2_blocks: int

    @property
    def level2_empty_fraction(self) -> float:
        return 1 - self.level2_nonempty / self.level2_blocks


def mersenne_observations(k_max: int = DEFAULT_K_MAX, m_max: int = DEFAULT_M_MAX,
                          rounds: int = DEFAULT_ROUNDS) -> MersenneReport:
    blocks = scan(k_max, 3, rounds)
    offsets = Counter(o for b in blocks if b.exponent >= 7 for o in b.prime_offsets)
    # with 2**k - 1 prime, no other offset of the block is prime
    exceptions = tuple(
        b.exponent for b in blocks
        if b.exponent >= 11 and 1 in b.prime_offsets and len(b.prime_offsets) > 1
    )
    hist = Counter(b.pattern for b in blocks)
    table = level2_table(m_max, rounds)
    nonempty = {k: v for k, v in table.items() if v}
    return MersenneReport(
        k_max=k_max,
        m_max=m_max,
        histogram=dict(sorted(hist.items())),
        exponents=exponents_by_pattern(k_max, 3, rounds),
        nonzero_patterns=tuple(sorted(p for p in hist if p)),
        max_primes_from_k7=max(b.primes for b in blocks if b.exponent >= 7),
        offset_counts={o: offsets.get(o, 0) for o in (1, 3, 5, 7)},
        exclusive_from_k11=not exceptions,
        exclusivity_exceptions=exceptions,
        level2=nonempty,
        level2_nonempty=len(nonempty),
        level2_blocks=len(table),
    )
