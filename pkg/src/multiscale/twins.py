"""Twin primes as a property chain and the per-block (twin pairs, primes) classes."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encoding import Hierarchy, PropertyChain, nonzero, popcount
from .errors import InvalidPatternError, RangeError
from .primality import is_probable_prime, sieve_flags
from .primes import P1

# Level-1 patterns holding at least one twin pair inside the block.
TWIN_PATTERNS = frozenset({10, 40, 106, 138, 160, 162})

# Value ranges listed for the twin level-2 sequence over [1, 65_536_000];
# they are a loose summary and do not match the attained set exactly.
STATED_LEVEL2_RANGES = (
    (0, 14), (16, 26), (28, 38), (40, 50), (52, 70), (72, 88),
    (96, 116), (128, 169), (192, 212), (224, 228), (245, 245),
)
STATED_LEVEL2_DISTINCT = 108


def twin_filter(values):
    return np.isin(np.asarray(values), tuple(TWIN_PATTERNS))


def twin_chain() -> PropertyChain:
    return PropertyChain("twins", is_probable_prime, (twin_filter, nonzero), indicator=sieve_flags)


@dataclass(frozen=True)
class TwinClassification:
    value: int
    pairs: int
    primes: int


def classify_twin(value: int) -> TwinClassification:
    """Twin pairs and primes inside one level-1 prime block.

    Two set bits two places apart are integers differing by 2; only pairs
    inside the block count.
    """
    value = int(value)
    if value not in P1:
        raise InvalidPatternError(f"{value} is not an attainable level-1 prime pattern")
    return TwinClassification(value, popcount(value & (value >> 2)), popcount(value))


def straddling_pairs(level1: np.ndarray) -> int:
    """Twin pairs ``(8n+7, 8n+9)`` split across two level-1 blocks.

    The in-block encoding cannot see them; they are reported separately.
    """
    v = np.asarray(level1)
    return int(np.count_nonzero((v[:-1] & 2) & ((v[1:] & 128) >> 6)))


def twin_level2_prefix(hier: Hierarchy, count: int) -> list[int]:
    values = hier[2]
    if not 0 <= count <= values.size:
        raise RangeError(f"count {count} outside 0..{values.size}")
    return [int(v) for v in values[:count]]


def expand_ranges(ranges) -> frozenset:
    return frozenset(v for lo, hi in ranges for v in range(lo, hi + 1))


@dataclass(frozen=True)
class CoverageReport:
    level: int
    n_max: int
    values: frozenset
    missing: int

    @property
    def distinct(self) -> int:
        return len(self.values)


def twin_value_coverage(hier: Hierarchy, level: int, n_max: int | None = None) -> CoverageReport:
    """Distinct values attained by ``level`` over ``[1, n_max]`` (a prefix of ``hier``)."""
    n_max = hier.n_max if n_max is None else n_max
    span = hier.params.block_size ** level
    if n_max % span or n_max > hier.n_max:
        raise RangeError(f"n_max={n_max} must be a multiple of {span} within [1, {hier.n_max}]")
    seen = frozenset(int(v) for v in np.unique(hier[level][: n_max // span]))
    return CoverageReport(level, n_max, seen, hier.params.max_pattern + 1 - len(seen))
