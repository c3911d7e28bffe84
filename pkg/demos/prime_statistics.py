"""
Level-1 statistics of the primes up to 65,536,000
=================================================

The 8,192,000 level-1 patterns take only fourteen values.  Counting blocks by
how many primes they hold gives an exact expression for the prime count, and
the log-integral gives a smooth approximation to compare it with.
"""

from multiscale import EncodingParams, build_hierarchy, prime_chain
from multiscale.analytic import li, psi
from multiscale.primality import sieve
from multiscale.primes import (
    block_proportions,
    classify_blocks,
    histogram,
    level3_report,
    position_probabilities_level1,
    position_probabilities_level2,
)

N = 65_536_000
hier = build_hierarchy(prime_chain(), EncodingParams(n_max=N))

h1 = histogram(hier.level(1))
for pattern, count in h1.as_dict().items():
    print(f"{pattern:3d} {pattern:08b} {count:9d}")

# Shares of blocks with 0, 1, 2 and 3-4 primes.
print(block_proportions(h1))

# pi(N) = N1 + 2 N2 + 3 N3 + 1, where the +1 accounts for the lone block {2, 3, 5, 7}.
classes = classify_blocks(h1)
pi = sieve(N).count()
print(classes, classes.prime_count, pi)

L, s = li(N), psi(N)
print("li/pi           ", L / pi)
print("psi li / N1     ", s * L / classes.n1)
print("multi / (1-psi)L", (2 * classes.n2 + 3 * classes.n3 + 1) / ((1 - s) * L))

# Where inside a block primes tend to fall, and the level-2 search order.
print(position_probabilities_level1(h1))
print(position_probabilities_level2(hier).search_order)

# Level 3: 47 distinct values, all with at least five non-empty sub-blocks.
rep = level3_report(hier)
print(len(rep.values), rep.missing, rep.first_deviation, rep.min_popcount)
