import random

import numpy as np
import pytest

from multiscale.encoding import EncodingParams, LevelSequence, build_hierarchy, popcount
from multiscale.errors import RangeError
from multiscale.primality import sieve
from multiscale.primes import (
    P1,
    POSITION_SETS,
    PatternHistogram,
    block_proportions,
    check_level1_restriction,
    classify_blocks,
    density_check,
    histogram,
    level3_report,
    position_probabilities_level1,
    position_probabilities_level2,
    prime_chain,
)


def test_prime_chain_filters():
    chain = prime_chain()
    assert not chain.phi(1)(0)
    assert chain.phi(1)(106)
    assert chain.phi(2)(255)
    assert chain.phi0(7) and not chain.phi0(9)


def test_restriction_examples():
    empty = PatternHistogram(1, np.zeros(256, dtype=np.int64), 0)
    assert check_level1_restriction(empty).ok
    seq = np.array([106, 40, 42, 0], dtype=np.uint8)
    verdict = check_level1_restriction(histogram(seq), seq)
    assert not verdict.ok
    assert verdict.violations == {42: [2]}


def test_level1_support_is_attainable_set(million_primes):
    hist = histogram(million_primes.level(1))
    assert check_level1_restriction(hist).ok
    assert set(hist.support()) == set(P1)


def test_histogram_totals(million_primes):
    for k in (1, 2, 3):
        hist = histogram(million_primes.level(k))
        assert hist.total == int(hist.counts.sum()) == million_primes.n_max // 8 ** k


def test_full_histograms(full_primes):
    h1 = histogram(full_primes.level(1))
    assert h1[0] == 4_832_539
    assert h1[106] == 1
    h3 = histogram(full_primes.level(3))
    assert h3[255] == 117_756


def test_classify_first_block():
    hier = build_hierarchy(prime_chain(), EncodingParams(n_max=512))
    classes = classify_blocks(hier.level(1), 8)
    assert (classes.n1, classes.n2, classes.n3) == (0, 0, 1)
    assert classes.prime_count == 4 == sieve(8).count()


def test_classify_all_zero_and_range_errors():
    zeros = np.zeros(16, dtype=np.uint8)
    classes = classify_blocks(zeros)
    assert (classes.n1, classes.n2, classes.n3) == (0, 0, 0)
    with pytest.raises(RangeError):
        classify_blocks(zeros, 12)
    with pytest.raises(RangeError):
        classify_blocks(zeros, 256)


def test_prime_count_identity_random_multiples(million_primes):
    bitmap = sieve(million_primes.n_max)
    rng = random.Random(7)
    for m in [8, 16, 64] + [8 * rng.randint(1, 10**6 // 8) for _ in range(100)]:
        assert classify_blocks(million_primes.level(1), m).prime_count == bitmap.count(m)


def test_block_proportions_sum_to_one(million_primes):
    props = block_proportions(histogram(million_primes.level(1)))
    assert sum(props.values()) == pytest.approx(1.0)


def test_empty_block_share_grows(full_primes):
    level1 = full_primes[1]
    shares = []
    for m in (10**3, 10**4, 10**5, 10**6, 10**7, 65_536_000):
        blocks = level1[: m // 8]
        shares.append(np.count_nonzero(blocks == 0) / blocks.size)
    assert all(a <= b for a, b in zip(shares, shares[1:]))


def test_position_sets_are_bit_sets():
    for bit, members in POSITION_SETS.items():
        assert set(members) == {c for c in P1 if (c >> bit) & 1}


def test_level1_positions(full_primes):
    probs = position_probabilities_level1(histogram(full_primes.level(1)))
    assert probs.probabilities[1] == pytest.approx(0.1181526, abs=1e-6)
    assert probs.probabilities[7] == pytest.approx(0.1180466, abs=1e-6)
    assert probs.search_order == (1, 3, 5, 7)


def test_level2_positions(full_primes):
    probs = position_probabilities_level2(full_primes)
    assert probs.probabilities[1] == pytest.approx(0.410776, abs=1e-5)
    assert probs.probabilities[6] == pytest.approx(0.409737, abs=1e-5)
    # every bit of a 2-pattern flags one level-1 block
    level1 = full_primes[1].reshape(-1, 8)
    for i in range(8):
        assert probs.probabilities[i] == np.count_nonzero(level1[:, 7 - i]) / level1.shape[0]


def test_level2_positions_uniform_data():
    values = np.arange(256, dtype=np.uint8)
    probs = position_probabilities_level2(values)
    assert set(probs.probabilities.values()) == {0.5}
    assert probs.search_order == tuple(range(8))


def test_density_examples(full_primes, million_primes):
    assert not density_check(full_primes, 2, full_primes.n_max)
    assert density_check(full_primes, 3, full_primes.n_max)
    assert density_check(million_primes, 1, 8)
    assert not density_check(million_primes, 1, 10**6)
    assert not density_check(million_primes, 2, 10**6)
    assert density_check(million_primes, 3, 10**6)


def brute_dense(primes_set, width, m):
    for lo in range(1, m + 1, width):
        if not any(i in primes_set for i in range(lo, min(lo + width, m + 1))):
            return False
    return True


@pytest.mark.parametrize("m", [5, 8, 23, 90, 100, 127, 300, 512, 1000, 1500, 4000])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_density_matches_brute_force(m, k):
    hier = build_hierarchy(prime_chain(), EncodingParams(n_max=4096))
    primes_set = set(int(p) for p in sieve(4096).primes())
    assert density_check(hier, k, m) == brute_dense(primes_set, 8 ** k, m)


def test_density_truncated_block_with_synthetic_gap():
    # integers 1..8 hold primes; 9..16 do not; m = 12 cuts the second block
    flags = np.zeros(512, dtype=bool)
    flags[[1, 2]] = True
    hier = build_hierarchy(
        type(prime_chain())("synthetic", lambda i: bool(flags[i - 1]), indicator=lambda n: flags[:n]),
        EncodingParams(n_max=512),
    )
    assert density_check(hier, 1, 8)
    assert not density_check(hier, 1, 12)
    assert density_check(hier, 2, 12)


def test_level3_report(full_primes):
    rep = level3_report(full_primes)
    assert len(rep.values) == 47
    assert rep.missing == 209
    assert rep.counts[31] == 1
    assert rep.min_popcount == 5
    assert rep.constant_prefix == 367
    assert rep.first_deviation == (367, 223)
    assert rep.empty_runs[31] == 192
    assert rep.empty_runs[255] == 0
    assert min(popcount(c) for c in rep.values) == 5
