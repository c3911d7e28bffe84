"""
Encoding primes as bit patterns
===============================

Every run of eight consecutive integers becomes one byte: bit ``j`` (counted
from the most significant end) is set when ``8n + 1 + j`` is prime.  Eight
such bytes collapse into one byte of the next level, with a bit set for each
non-empty block, and so on.
"""

import numpy as np

from multiscale import EncodingParams, build_hierarchy, d2b, prime_chain
from multiscale.render import render_spiral, spiral, tree

# Three levels over [1, 32768]: 4096, 512 and 64 patterns.
hier = build_hierarchy(prime_chain(), EncodingParams(n_max=512 * 64))
print([hier[k].size for k in (1, 2, 3)])

# The first block holds 2, 3, 5, 7 -> 0b01101010 = 106.
print(hier[1][:8], d2b(int(hier[1][0])))

# The first level-2 block with an empty sub-block is n = 3 (integers 201..208).
print(hier[2][:7])

# Laid out as a counterclockwise spiral starting at the centre and stepping right.
print(render_spiral(spiral(hier.level(1), 7)))
print(render_spiral(spiral(hier.level(2), 7)))

# The whole three-level path down to the block [225, 232] (pattern 40: 227, 229).
print(tree(hier, 0))

# Level 3 saturates quickly: nearly every 512-integer block hits all eight sub-blocks.
print(np.count_nonzero(hier[3] == 255), "of", hier[3].size)
