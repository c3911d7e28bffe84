import numpy as np
import pytest

from multiscale.encoding import EncodingParams, build_hierarchy
from multiscale.errors import ConfigurationError, InvalidPatternError
from multiscale.primality import sieve
from multiscale.primes import prime_chain
from multiscale.reconstruction import reconstruct


@pytest.fixture(scope="module")
def hier4096():
    return build_hierarchy(prime_chain(), EncodingParams(n_max=4096))


def test_single_block_recovers_fig_one_leaf():
    hier = build_hierarchy(prime_chain(), EncodingParams(n_max=512))
    result = reconstruct(hier, 255)
    assert result.matches == (0,)
    assert (0, 3, 28, 227) in result.ancestry
    assert (0, 3, 28, 229) in result.ancestry
    assert [row[3] for row in result.ancestry if row[2] == 28] == [227, 229]
    assert list(result.integers) == [int(p) for p in sieve(512).primes()]


def test_absent_value_gives_empty_result(hier4096):
    absent = sorted(set(range(256)) - set(int(v) for v in hier4096[3]))[0]
    result = reconstruct(hier4096, absent)
    assert result.matches == () and result.integers == ()


def test_round_trip_over_4096(hier4096):
    recovered = set()
    for c in np.unique(hier4096[3]):
        recovered.update(reconstruct(hier4096, int(c)).integers)
    assert recovered == set(int(p) for p in sieve(4096).primes())


def test_soundness_on_million(million_primes):
    bitmap = sieve(million_primes.n_max)
    for c in (255, 254, 127, 223):
        result = reconstruct(million_primes, c)
        assert result.matches
        assert all(bitmap.is_prime(i) for i in result.integers)
        assert list(result.integers) == sorted(result.integers)


def test_rejects_shallow_hierarchy_and_bad_target(hier4096):
    shallow = build_hierarchy(prime_chain(), EncodingParams(n_max=512, levels=2))
    with pytest.raises(ConfigurationError):
        reconstruct(shallow, 255)
    with pytest.raises(InvalidPatternError):
        reconstruct(hier4096, 256)
