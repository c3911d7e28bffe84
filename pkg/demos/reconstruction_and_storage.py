"""
Going back down, and keeping hierarchies on disk
================================================

A level-3 value selects level-2 blocks, which select level-1 blocks, whose
set bits are the integers themselves.  Hierarchies are written to a small
binary container and read back bit for bit.
"""

import tempfile
from pathlib import Path

from multiscale import EncodingParams, build_hierarchy, prime_chain
from multiscale import storage
from multiscale.primality import sieve
from multiscale.reconstruction import reconstruct

hier = build_hierarchy(prime_chain(), EncodingParams(n_max=4096))

# Below 4096 every level-3 block is full: each 64-integer sub-block holds a prime.
print(hier[3])
result = reconstruct(hier, 255)
print(len(result.integers), result.integers[:10])

# The union over all observed values is exactly the set of primes.
recovered = set()
for c in set(hier[3].tolist()):
    recovered.update(reconstruct(hier, c).integers)
print(recovered == set(sieve(4096).primes().tolist()))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "primes.msp"
    storage.save(hier, path)
    print(storage.read_header(path.read_bytes()))
    print(storage.load(path) == hier)
