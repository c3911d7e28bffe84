"""Primality backends: a packed segmented sieve and a strong-probable-prime test."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
import numpy as np

from .errors import ConfigurationError

DEFAULT_ROUNDS = 32
# Odd candidates per sieve segment; 2**18 bools stay inside L2.
SEGMENT = 1 << 18
_TRIAL_LIMIT = 1 << 16


def simple_sieve(limit: int) -> np.ndarray:
    """Boolean table ``is_prime[0..limit]`` by the plain sieve."""
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_prime[p]:
            is_prime[p * p :: 2 * p] = False
    return is_prime


def _odd_sieve(n_max: int, segment: int) -> np.ndarray:
    """Flags for the odd numbers ``1, 3, 5, ...`` up to ``n_max``."""
    n_odd = (n_max + 1) // 2
    flags = np.ones(n_odd, dtype=bool)
    flags[0] = False
    base = np.flatnonzero(simple_sieve(math.isqrt(n_max)))
    base = base[base > 2]
    for lo in range(0, n_odd, segment):
        hi = min(lo + segment, n_odd)
        window = flags[lo:hi]
        first_odd = 2 * lo + 1
        last_odd = 2 * hi - 1
        for p in base:
            p = int(p)
            start = p * p
            if start > last_odd:
                break
            if start < first_odd:
                start = -(-first_odd // p) * p
                if start % 2 == 0:
                    start += p
            window[(start - first_odd) // 2 :: p] = False
    return flags


@dataclass(frozen=True, eq=False)
class PrimalityBitmap:
    """Packed primality flags for ``1..n_max``; bit ``i`` (1-based) set iff ``i`` is prime.

    Bits are stored most significant first, so byte ``n`` holds integers
    ``8n+1 .. 8n+8`` in the same order as a level-1 pattern.
    """

    n_max: int
    bits: np.ndarray

    def is_prime(self, i: int) -> bool:
        if not 1 <= i <= self.n_max:
            raise IndexError(f"{i} outside [1, {self.n_max}]")
        j = i - 1
        return bool((self.bits[j >> 3] >> (7 - (j & 7))) & 1)

    def to_bool(self) -> np.ndarray:
        return np.unpackbits(self.bits, count=self.n_max).astype(bool)

    def count(self, m: int | None = None) -> int:
        """Prime counting function on ``[1, m]``."""
        m = self.n_max if m is None else m
        if not 0 <= m <= self.n_max:
            raise IndexError(f"{m} outside [0, {self.n_max}]")
        full, rest = divmod(m, 8)
        total = int(np.bitwise_count(self.bits[:full]).sum(dtype=np.int64))
        if rest:
            total += (int(self.bits[full]) >> (8 - rest)).bit_count()
        return total

    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.to_bool()) + 1

    def __eq__(self, other):
        if not isinstance(other, PrimalityBitmap):
            return NotImplemented
        return self.n_max == other.n_max and np.array_equal(self.bits, other.bits)


def sieve_flags(n_max: int, segment: int = SEGMENT) -> np.ndarray:
    """Boolean primality of ``1..n_max`` (index ``i-1`` holds integer ``i``)."""
    if n_max < 2:
        raise ConfigurationError(f"n_max must be >= 2, got {n_max}")
    flags = np.zeros(n_max, dtype=bool)
    flags[0::2] = _odd_sieve(n_max, segment)
    flags[1] = True
    return flags


def sieve(n_max: int, segment: int = SEGMENT) -> PrimalityBitmap:
    bits = np.packbits(sieve_flags(n_max, segment))
    bits.setflags(write=False)
    return PrimalityBitmap(n_max, bits)


@lru_cache(maxsize=1)
def _trial_table():
    table = simple_sieve(_TRIAL_LIMIT)
    primes = [int(p) for p in np.flatnonzero(table)]
    return table, gmpy2.mpz(math.prod(primes)), tuple(primes)


def witnesses(rounds: int) -> tuple[int, ...]:
    """Fixed witness schedule: the first ``rounds`` primes."""
    primes = _trial_table()[2]
    if not 1 <= rounds <= len(primes):
        raise ConfigurationError(f"rounds must be in 1..{len(primes)}, got {rounds}")
    return primes[:rounds]


def _strong_probable_prime(n, d, s, a) -> bool:
    x = gmpy2.powmod(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = gmpy2.powmod(x, 2, n)
        if x == n - 1:
            return True
    return False


def is_probable_prime(value: int, rounds: int = DEFAULT_ROUNDS) -> bool:
    """Miller-Rabin with the first ``rounds`` primes as bases.

    Exact below ``2**32``; above that a composite passes with probability at
    most ``4**-rounds`` (and never below ~3.3e24 once ``rounds >= 13``).
    """
    n = int(value)
    table, primorial, _ = _trial_table()
    if n <= _TRIAL_LIMIT:
        return n >= 0 and bool(table[n])
    if gmpy2.gcd(n, primorial) != 1:
        return False
    if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
        return True
    bases = witnesses(rounds)
    n = gmpy2.mpz(n)
    d = n - 1
    s = gmpy2.bit_scan1(d)
    d >>= s
    return all(_strong_probable_prime(n, d, s, a) for a in bases)
