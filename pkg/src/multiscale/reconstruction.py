"""Recover the integers encoded under a given level-3 pattern value."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encoding import Hierarchy, d2b
from .errors import ConfigurationError, InvalidPatternError


@dataclass(frozen=True)
class ReconstructionResult:
    target: int
    matches: tuple
    integers: tuple
    # (level-3 index, level-2 index, level-1 index, integer) per recovered integer
    ancestry: tuple = ()


def reconstruct(hier: Hierarchy, target: int) -> ReconstructionResult:
    """Walk down from every level-3 block equal to ``target``.

    For each match ``n`` and each position ``j`` flagged in ``target`` the
    level-2 block ``8n + j`` is expanded; its flagged positions ``i`` select
    level-1 blocks ``8(8n + j) + i``, whose set bits ``p`` give the integers
    ``8(8(8n + j) + i) + 1 + p``.
    """
    if hier.depth < 3:
        raise ConfigurationError(f"reconstruction needs 3 levels, hierarchy has {hier.depth}")
    t = hier.params.t
    width = hier.params.block_size
    if not 0 <= target <= hier.params.max_pattern:
        raise InvalidPatternError(f"target {target} outside [0, {hier.params.max_pattern}]")
    level3, level2, level1 = hier[3], hier[2], hier[1]
    matches = tuple(int(n) for n in np.flatnonzero(level3 == target))
    top = d2b(target, t)
    ancestry = []
    for n in matches:
        assert d2b(level3[n], t) == top
        for j in top:
            m = width * n + j
            for i in d2b(level2[m], t):
                k = width * m + i
                for p in d2b(level1[k], t):
                    ancestry.append((n, m, k, width * k + p + 1))
    # blocks are disjoint and visited in increasing order, so this is sorted
    integers = tuple(row[3] for row in ancestry)
    return ReconstructionResult(target, matches, integers, tuple(ancestry))
