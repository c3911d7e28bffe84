"""
Twin primes
===========

Same level-1 bytes as for the primes, but only blocks containing a pair
``(p, p + 2)`` pass to level 2.  Pairs that straddle two blocks (``8n + 7``,
``8n + 9``) are invisible to the encoding and counted separately.
"""

from multiscale import EncodingParams, build_hierarchy
from multiscale.twins import (
    TWIN_PATTERNS,
    classify_twin,
    straddling_pairs,
    twin_chain,
    twin_value_coverage,
)

for value in sorted(TWIN_PATTERNS):
    print(value, classify_twin(value))

hier = build_hierarchy(twin_chain(), EncodingParams(n_max=65_536_000))
print("level 2 prefix:", hier[2][:20].tolist())
print("level 3 prefix:", hier[3][:20].tolist())

cov2 = twin_value_coverage(hier, 2)
print("distinct level-2 values:", cov2.distinct)

# Level 3 reaches every byte value well before the end of the interval.
print("level 3 over [1, 8192000]:", twin_value_coverage(hier, 3, 8_192_000).distinct)

print("pairs split across blocks:", straddling_pairs(hier[1]))
