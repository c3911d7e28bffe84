import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multiscale.errors import ConfigurationError
from multiscale.primality import is_probable_prime, sieve, sieve_flags, witnesses

from conftest import naive_is_prime


def test_small_counts_and_anchors():
    bitmap = sieve(100)
    assert bitmap.count(10) == 4
    assert not bitmap.is_prime(1)
    assert bitmap.is_prime(2)
    assert not bitmap.is_prime(4)
    assert bitmap.count() == 25


def test_sieve_rejects_tiny_interval():
    with pytest.raises(ConfigurationError):
        sieve(1)


@pytest.mark.parametrize("segment", [7, 64, 1000, 1 << 18])
def test_segmented_sieve_matches_trial_division(segment):
    flags = sieve_flags(5000, segment=segment)
    assert flags.tolist() == [naive_is_prime(i) for i in range(1, 5001)]


def test_prime_count_monotone():
    bitmap = sieve(20_000)
    counts = [bitmap.count(m) for m in range(0, 20_001, 37)]
    assert counts == sorted(counts)


def test_packed_bytes_are_level1_patterns():
    bitmap = sieve(64)
    assert bitmap.bits[:2].tolist() == [106, 40]


def test_full_interval_prime_count(full_primes):
    # independently recounted with a plain boolean sieve
    n = full_primes.n_max
    table = np.ones(n + 1, dtype=bool)
    table[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if table[p]:
            table[p * p :: p] = False
    assert sieve(n).count() == int(table.sum()) == 3_870_366


def test_probable_prime_examples():
    assert is_probable_prime(127)
    assert is_probable_prime(509)
    assert not is_probable_prime(2047)
    assert is_probable_prime(2 ** 521 - 1)
    assert not is_probable_prime(2 ** 251 - 1)


def test_probable_prime_agrees_with_sieve_to_a_million():
    flags = sieve_flags(10**6)
    candidates = np.arange(1, 10**6 + 1)
    assert all(is_probable_prime(int(i)) == bool(f) for i, f in zip(candidates, flags))


def test_strong_pseudoprimes_are_rejected():
    # strong pseudoprimes to base 2 and to bases 2,3,5,7
    for n in (2047, 3215031751, 3825123056546413051, 318665857834031151167461):
        assert not is_probable_prime(n)


def test_witness_schedule_is_fixed():
    assert witnesses(5) == (2, 3, 5, 7, 11)
    with pytest.raises(ConfigurationError):
        witnesses(0)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10**6), st.integers(2, 10**6))
def test_products_are_composite(a, b):
    assert not is_probable_prime(a * b)
