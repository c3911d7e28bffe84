"""Primes as a property chain: histograms, block classes, search order, density."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .encoding import (
    Hierarchy,
    LevelSequence,
    PropertyChain,
    next_level,
    nonzero,
    pack_flags,
    popcount,
)
from .errors import RangeError
from .primality import is_probable_prime, sieve_flags

# Attainable level-1 prime patterns.
P1 = frozenset({0, 2, 8, 10, 32, 34, 40, 106, 128, 130, 136, 138, 160, 162})

# Patterns with exactly 1, 2, 3 primes; the single 4-prime block (106, integers
# 2, 3, 5, 7) is counted with the 3-prime class so that
# N1 + 2*N2 + 3*N3 + 1 is the exact prime count.
CLASS_PATTERNS = {
    1: (2, 8, 32, 128),
    2: (10, 34, 40, 130, 136, 160),
    3: (106, 138, 162),
}

# Level-1 patterns with a prime at bit b1, b3, b5, b7 (bit i has weight 2**i).
POSITION_SETS = {
    1: (2, 10, 34, 106, 130, 138, 162),
    3: (8, 10, 40, 106, 136, 138),
    5: (32, 34, 40, 106, 160, 162),
    7: (128, 130, 136, 138, 160, 162),
}


def prime_chain() -> PropertyChain:
    """Primality at level 0, non-empty sub-block at every level above."""
    return PropertyChain("primes", is_probable_prime, (nonzero, nonzero), indicator=sieve_flags)


@dataclass(frozen=True, eq=False)
class PatternHistogram:
    level: int
    counts: np.ndarray
    total: int

    def __getitem__(self, c: int) -> int:
        return int(self.counts[c])

    def support(self) -> tuple[int, ...]:
        return tuple(int(c) for c in np.flatnonzero(self.counts))

    def as_dict(self) -> dict[int, int]:
        return {c: int(self.counts[c]) for c in self.support()}

    def __eq__(self, other):
        if not isinstance(other, PatternHistogram):
            return NotImplemented
        return self.level == other.level and self.total == other.total and np.array_equal(self.counts, other.counts)


def histogram(seq: LevelSequence | np.ndarray, level: int | None = None, t: int = 3) -> PatternHistogram:
    """Exact occurrence counts of every pattern value in ``seq``."""
    if isinstance(seq, LevelSequence):
        level, values = seq.level, seq.values
    else:
        values = np.asarray(seq)
    counts = np.bincount(values, minlength=1 << (1 << t)).astype(np.int64)
    return PatternHistogram(level if level is not None else 1, counts, int(values.size))


@dataclass(frozen=True)
class RestrictionVerdict:
    ok: bool
    # offending value -> block indices (or its count when only a histogram is given)
    violations: dict = field(default_factory=dict)


def check_level1_restriction(hist: PatternHistogram, seq: LevelSequence | None = None) -> RestrictionVerdict:
    """Check that only the 14 attainable prime patterns occur."""
    bad = [c for c in hist.support() if c not in P1]
    if seq is None:
        return RestrictionVerdict(not bad, {c: hist[c] for c in bad})
    values = seq.values if isinstance(seq, LevelSequence) else np.asarray(seq)
    return RestrictionVerdict(not bad, {c: np.flatnonzero(values == c).tolist() for c in bad})


@dataclass(frozen=True)
class BlockClassCounts:
    m: int
    n1: int
    n2: int
    n3: int

    @property
    def prime_count(self) -> int:
        return self.n1 + 2 * self.n2 + 3 * self.n3 + 1


def _prefix_histogram(source, m: int | None) -> PatternHistogram:
    if isinstance(source, PatternHistogram):
        if m is not None and m != 8 * source.total:
            raise RangeError(f"histogram covers [1, {8 * source.total}], not [1, {m}]")
        return source
    values = source.values if isinstance(source, LevelSequence) else np.asarray(source)
    if m is None:
        m = 8 * len(values)
    if m % 8:
        raise RangeError(f"m={m} is not a multiple of 8")
    if m > 8 * len(values):
        raise RangeError(f"m={m} beyond the encoded interval [1, {8 * len(values)}]")
    return histogram(values[: m // 8], level=1)


def classify_blocks(source, m: int | None = None) -> BlockClassCounts:
    """Counts of level-1 blocks holding 1, 2 and 3 (or 4) primes in ``[1, m]``.

    ``source`` is a level-1 histogram (then ``m`` must equal its extent) or a
    level-1 sequence, of which the prefix covering ``[1, m]`` is used.
    """
    hist = _prefix_histogram(source, m)
    n1, n2, n3 = (sum(hist[c] for c in CLASS_PATTERNS[j]) for j in (1, 2, 3))
    return BlockClassCounts(8 * hist.total, n1, n2, n3)


def block_proportions(hist: PatternHistogram) -> dict[str, float]:
    """Share of level-1 blocks with 0, 1, 2 and 3-4 primes."""
    by_count = np.zeros(5, dtype=np.int64)
    for c in hist.support():
        by_count[popcount(c)] += hist[c]
    total = hist.total
    return {
        "0": float(by_count[0] / total),
        "1": float(by_count[1] / total),
        "2": float(by_count[2] / total),
        "3-4": float((by_count[3] + by_count[4]) / total),
    }


@dataclass(frozen=True)
class PositionProbabilities:
    level: int
    probabilities: dict
    search_order: tuple


def _order(probabilities: dict) -> tuple:
    return tuple(sorted(probabilities, key=lambda i: (-probabilities[i], i)))


def position_probabilities_level1(hist: PatternHistogram) -> PositionProbabilities:
    """Share of level-1 blocks with a prime at odd bit ``b1, b3, b5, b7``."""
    probs = {i: sum(hist[c] for c in members) / hist.total for i, members in POSITION_SETS.items()}
    return PositionProbabilities(1, probs, _order(probs))


def position_probabilities_level2(source, t: int = 3) -> PositionProbabilities:
    """Share of level-2 blocks whose sub-block at bit ``b_i`` is flagged."""
    values = source[2] if isinstance(source, Hierarchy) else np.asarray(getattr(source, "values", source))
    width = 1 << t
    probs = {i: float(((values >> i) & 1).sum(dtype=np.int64)) / values.size for i in range(width)}
    return PositionProbabilities(2, probs, _order(probs))


def _truncated_pattern(hier: Hierarchy, k: int, n: int, m: int, chain: PropertyChain | None) -> int:
    """Level-``k`` pattern of block ``n`` with every integer above ``m`` dropped."""
    t = hier.params.t
    width = hier.params.block_size
    span1 = width ** (k - 1)
    lvl1 = np.array(hier[1][n * span1 : (n + 1) * span1])
    flags = np.unpackbits(lvl1.astype(np.uint8)) if t == 3 else np.array(
        [(int(v) >> (width - 1 - j)) & 1 for v in lvl1 for j in range(width)], dtype=np.uint8)
    lo = n * width ** k
    flags[max(m - lo, 0):] = 0
    values = pack_flags(flags.astype(bool), t)
    for level in range(1, k):
        phi = chain.phi(level) if chain is not None else nonzero
        values = next_level(values, phi, t)
    return int(values[0])


def density_check(hier: Hierarchy, k: int, m: int, chain: PropertyChain | None = None) -> bool:
    """Whether every level-``k`` block meeting ``[1, m]`` holds the property there."""
    if not 1 <= k <= hier.depth:
        raise RangeError(f"level {k} not in 1..{hier.depth}")
    if not 1 <= m <= hier.n_max:
        raise RangeError(f"m={m} outside [1, {hier.n_max}]")
    span = hier.params.block_size ** k
    full, rest = divmod(m, span)
    if np.any(hier[k][:full] == 0):
        return False
    if rest:
        return _truncated_pattern(hier, k, full, m, chain) != 0
    return True


@dataclass(frozen=True)
class LevelReport:
    level: int
    values: tuple
    counts: dict
    missing: int
    min_popcount: int
    constant_prefix: int
    first_deviation: tuple | None
    # pattern value -> longest run of consecutive integers covered by unflagged sub-blocks
    empty_runs: dict


def _longest_zero_run(value: int, width: int) -> int:
    best = run = 0
    for j in range(width):
        if (value >> (width - 1 - j)) & 1:
            run = 0
        else:
            run += 1
            best = max(best, run)
    return best


def level_report(hier: Hierarchy, k: int = 3) -> LevelReport:
    """Distinct values, gaps and run statistics of level ``k``."""
    values = hier[k]
    width = hier.params.block_size
    hist = histogram(hier.level(k), t=hier.params.t)
    seen = hist.support()
    top = hier.params.max_pattern
    deviating = np.flatnonzero(values != values[0])
    first = (int(deviating[0]), int(values[deviating[0]])) if deviating.size else None
    sub_span = width ** (k - 1)
    return LevelReport(
        level=k,
        values=seen,
        counts=hist.as_dict(),
        missing=top + 1 - len(seen),
        min_popcount=min(popcount(c) for c in seen),
        constant_prefix=int(deviating[0]) if deviating.size else int(values.size),
        first_deviation=first,
        empty_runs={c: _longest_zero_run(c, width) * sub_span for c in seen},
    )


def level3_report(hier: Hierarchy) -> LevelReport:
    return level_report(hier, 3)
