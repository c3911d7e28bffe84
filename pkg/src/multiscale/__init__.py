"""Multi-scale bit-pattern encoding of integer properties (primes, twin primes, Mersenne blocks)."""
from .analytic import EstimatorConfig, density_threshold, li, psi
from .encoding import (
    EncodingParams,
    Hierarchy,
    LevelSequence,
    PropertyChain,
    block_range,
    build_hierarchy,
    d2b,
    encode_level1,
    encode_next_level,
    popcount,
)
from .primality import PrimalityBitmap, is_probable_prime, sieve
from .primes import prime_chain
from .reconstruction import reconstruct
from .twins import twin_chain
from .mersenne import mersenne_chain

__version__ = "0.1.0"
