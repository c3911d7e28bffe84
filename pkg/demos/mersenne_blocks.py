"""
Blocks just below powers of two
===============================

For odd ``k`` the eight integers ``2**k - 7 .. 2**k`` are encoded with the
bit of ``2**k - o`` at weight ``2**o``; even members are never prime, so only
offsets 7, 5, 3, 1 matter.  Scanning all odd ``k`` up to 4001 takes about a
minute (big-integer Miller-Rabin); ``K_MAX`` below keeps the demo quick.
"""

from multiscale import mersenne as mer

K_MAX = 1301

for k in (3, 5, 7, 9):
    print(mer.mersenne_level1(k))

hist = mer.mersenne_level1_histogram(K_MAX)
print(hist.as_dict())
for pattern, exponents in mer.exponents_by_pattern(K_MAX).items():
    print(f"{pattern:3d}: {exponents}")

# Level 2 groups eight consecutive odd exponents 16m+3 .. 16m+17.
table = mer.level2_table(K_MAX // 16 - 1)
print({k: v for k, v in table.items() if v})
