"""Regression checks of every published table and observation.

Each check returns a :class:`Check` carrying measured and expected values so
that a failing run says exactly what differs.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import expected as E
from . import mersenne as mer
from .analytic import li, psi
from .encoding import EncodingParams, Hierarchy, build_hierarchy, d2b, popcount
from .errors import MissingDataError
from .primality import sieve
from .primes import (
    P1,
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
from .reconstruction import reconstruct
from .twins import twin_chain, twin_value_coverage

SCOPES = ("primes", "twins", "mersenne", "properties")


@dataclass
class Check:
    id: str
    name: str
    passed: bool
    measured: object
    expected: object
    tolerance: float | None = None
    note: str = ""


def _close(measured: dict, expected: dict, tol: float) -> bool:
    return all(abs(measured[k] - v) <= tol for k, v in expected.items())


def store_path(store, tag: str) -> Path:
    return Path(store) / f"{tag}.msp"


def obtain(tag: str, n_max: int, store=None, levels: int = 3) -> Hierarchy:
    """Load ``<store>/<tag>.msp`` or, without a store, build it in memory."""
    from .storage import load

    chains = {"primes": prime_chain, "twins": twin_chain, "mersenne": mer.mersenne_chain}
    if store is None:
        return build_hierarchy(chains[tag](), EncodingParams(n_max=n_max, levels=levels))
    path = store_path(store, tag)
    if not path.exists():
        raise MissingDataError(
            f"no {tag!r} hierarchy in {store}; run "
            f"`multiscale --store {store} --n-max {n_max} build --chain {tag}` first"
        )
    hier = load(path, tag=tag)
    if hier.n_max < n_max or hier.depth < levels:
        raise MissingDataError(
            f"{path} covers [1, {hier.n_max}] with {hier.depth} levels; "
            f"need [1, {n_max}] with {levels}: rebuild with --n-max {n_max}"
        )
    return hier


def prime_checks(hier: Hierarchy) -> list[Check]:
    checks = []
    h1 = histogram(hier.level(1))
    support = set(h1.support())
    verdict = check_level1_restriction(h1, hier.level(1))
    checks.append(Check("1", "level-1 prime patterns are the 14 attainable values",
                        verdict.ok and support == set(P1), sorted(support), sorted(P1),
                        note=f"violations: {verdict.violations}" if verdict.violations else ""))
    measured = h1.as_dict()
    checks.append(Check("2", "level-1 prime histogram", measured == E.LEVEL1_PRIME_HISTOGRAM,
                        measured, E.LEVEL1_PRIME_HISTOGRAM, 0))
    props = block_proportions(h1)
    checks.append(Check("3", "share of blocks with 0/1/2/3-4 primes",
                        _close(props, E.BLOCK_PROPORTIONS, E.BLOCK_PROPORTION_TOL),
                        props, E.BLOCK_PROPORTIONS, E.BLOCK_PROPORTION_TOL))

    m = hier.n_max
    classes = classify_blocks(h1)
    pi = int(np.bitwise_count(hier[1]).sum(dtype=np.int64))
    li_m, psi_m = li(m), psi(m)
    ratios = {
        "li/pi": li_m / pi,
        "psi*li/N1": psi_m * li_m / classes.n1,
        "(2N2+3N3+1)/((1-psi)*li)": (2 * classes.n2 + 3 * classes.n3 + 1) / ((1 - psi_m) * li_m),
    }
    want = dict(zip(ratios, (E.LI_OVER_PI, E.PSI_LI_OVER_N1, E.MULTI_OVER_PSI_LI)))
    checks.append(Check("4", "prime-count estimator ratios at m = n_max", _close(ratios, want, E.RATIO_TOL),
                        ratios, want, E.RATIO_TOL,
                        note=f"pi={pi}, N1+2N2+3N3+1={classes.prime_count}"))

    p1 = position_probabilities_level1(h1)
    ordered = [p1.probabilities[i] for i in (1, 3, 5, 7)]
    checks.append(Check("5", "level-1 prime position probabilities",
                        _close(p1.probabilities, E.LEVEL1_POSITIONS, E.LEVEL1_POSITION_TOL)
                        and all(a > b for a, b in zip(ordered, ordered[1:])),
                        p1.probabilities, E.LEVEL1_POSITIONS, E.LEVEL1_POSITION_TOL))
    p2 = position_probabilities_level2(hier)
    checks.append(Check("6", "level-2 prime position probabilities and search order",
                        _close(p2.probabilities, E.LEVEL2_POSITIONS, E.LEVEL2_POSITION_TOL)
                        and p2.search_order == E.LEVEL2_SEARCH_ORDER,
                        {"p": p2.probabilities, "order": p2.search_order},
                        {"p": E.LEVEL2_POSITIONS, "order": E.LEVEL2_SEARCH_ORDER}, E.LEVEL2_POSITION_TOL))

    rep = level3_report(hier)
    measured = {
        "constant_prefix": rep.constant_prefix,
        "first_deviation": rep.first_deviation,
        "histogram": rep.counts,
        "min_primes": rep.min_popcount,
    }
    want = {
        "constant_prefix": E.LEVEL3_CONSTANT_PREFIX,
        "first_deviation": E.LEVEL3_FIRST_DEVIATION,
        "histogram": E.LEVEL3_PRIME_HISTOGRAM,
        "min_primes": E.LEVEL3_MIN_PRIMES,
    }
    checks.append(Check("7", "level-3 prime patterns", measured == want, measured, want, 0,
                        note=f"{len(rep.values)} distinct, {rep.missing} of 256 missing "
                             f"(stated: {E.LEVEL3_STATED_MISSING})"))
    return checks


def twin_checks(hier: Hierarchy, n_level3: int = E.TWIN_LEVEL3_N) -> list[Check]:
    cov2 = twin_value_coverage(hier, 2)
    cov3 = twin_value_coverage(hier, 3, n_level3)
    measured = {
        "level2_prefix": tuple(int(v) for v in hier[2][:20]),
        "level2_distinct": cov2.distinct,
        "level3_prefix": tuple(int(v) for v in hier[3][:20]),
        "level3_distinct": cov3.distinct,
    }
    want = {
        "level2_prefix": E.TWIN_LEVEL2_PREFIX,
        "level2_distinct": E.TWIN_LEVEL2_DISTINCT,
        "level3_prefix": E.TWIN_LEVEL3_PREFIX,
        "level3_distinct": E.TWIN_LEVEL3_DISTINCT,
    }
    return [Check("8", "twin-prime level-2/3 sequences", measured == want, measured, want, 0,
                  note=f"level-2 missing {cov2.missing} (stated {E.TWIN_LEVEL2_STATED_MISSING})")]


def mersenne_checks(k_max: int = E.MERSENNE_K_MAX, m_max: int = E.MERSENNE_M_MAX) -> list[Check]:
    rep = mer.mersenne_observations(k_max, m_max)
    measured = {
        "histogram": rep.histogram,
        "exponents": {p: tuple(ks) for p, ks in rep.exponents.items()},
        "level2": rep.level2,
        "offset_counts": rep.offset_counts,
        "level2_nonempty": rep.level2_nonempty,
        "level2_blocks": rep.level2_blocks,
    }
    want = {
        "histogram": E.MERSENNE_HISTOGRAM,
        "exponents": E.MERSENNE_EXPONENTS,
        "level2": E.MERSENNE_LEVEL2,
        "offset_counts": E.MERSENNE_OFFSET_COUNTS,
        "level2_nonempty": E.MERSENNE_LEVEL2_NONEMPTY,
        "level2_blocks": E.MERSENNE_LEVEL2_BLOCKS,
    }
    diff = [key for key in want if measured[key] != want[key]]
    return [Check("9", "Mersenne-adjacent patterns", not diff, measured, want, 0,
                  note=(f"mismatched: {diff}; " if diff else "")
                  + f"nonzero patterns {rep.nonzero_patterns}, max primes per block (k>=7) "
                    f"{rep.max_primes_from_k7}, exclusivity from k=11: {rep.exclusive_from_k11}, "
                    f"empty level-2 share {rep.level2_empty_fraction:.3f}")]


def reconstruction_checks(full: Hierarchy, samples: int = 5, seed: int = 0) -> list[Check]:
    small = build_hierarchy(prime_chain(), EncodingParams(n_max=4096))
    recovered = set()
    for c in np.unique(small[3]):
        recovered.update(reconstruct(small, int(c)).integers)
    truth = set(int(p) for p in sieve(4096).primes())
    bitmap = sieve(full.n_max)
    values = sorted(int(c) for c in np.unique(full[3]))
    picks = random.Random(seed).sample(values, min(samples, len(values)))
    sound = all(bitmap.is_prime(i) for c in picks for i in reconstruct(full, c).integers)
    return [Check("10", "reconstruction round trip and soundness", recovered == truth and sound,
                  {"round_trip": recovered == truth, "sound": sound, "sampled": picks},
                  {"round_trip": True, "sound": True})]


def naive_levels(phi0, filters, n_max: int, levels: int) -> list[list[int]]:
    """Direct evaluation of the recursive definition, one integer at a time."""
    out = [[sum(int(bool(phi0(8 * n + 1 + j))) << (7 - j) for j in range(8)) for n in range(n_max // 8)]]
    for k in range(1, levels):
        phi = filters[k - 1] if k <= len(filters) else (lambda v: v != 0)
        prev = out[-1]
        out.append([sum(int(bool(phi(prev[8 * n + j]))) << (7 - j) for j in range(8))
                    for n in range(len(prev) // 8)])
    return out


def property_checks(seed: int = 0) -> list[Check]:
    from .storage import load, save
    import tempfile

    checks = []
    identities = all(
        len(d2b(v)) == popcount(v) and sum(1 << (7 - j) for j in d2b(v)) == v for v in range(256)
    )
    checks.append(Check("12a", "d2b/popcount identities on [0, 255]", identities, identities, True))

    hier = build_hierarchy(prime_chain(), EncodingParams.covering(10**6))
    bitmap = sieve(hier.n_max)
    rng = random.Random(seed)
    ms = [8 * rng.randint(1, 10**6 // 8) for _ in range(100)]
    bad = [m for m in ms if classify_blocks(hier.level(1), m).prime_count != bitmap.count(m)]
    checks.append(Check("12b", "pi(m) = N1 + 2N2 + 3N3 + 1 at 100 random m", not bad, bad, []))

    dense = {k: density_check(hier, k, 10**6) for k in (1, 2, 3)}
    want = {1: False, 2: False, 3: True}
    checks.append(Check("12c", "density on [1, 10**6] by level", dense == want, dense, want))

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "h.msp"
        save(hier, path)
        same = load(path) == hier
    checks.append(Check("12d", "container round trip", same, same, True))
    return checks


def oracle_checks(n: int = 10**5) -> list[Check]:
    params = EncodingParams.covering(n)
    primes = set(int(p) for p in sieve(params.n_max).primes())
    results = {}
    for chain in (prime_chain(), twin_chain(), mer.mersenne_chain()):
        fast = build_hierarchy(chain, params)
        slow = naive_levels(primes.__contains__, chain.filters, params.n_max, params.levels)
        results[chain.name] = all(fast[k + 1].tobytes() == bytes(slow[k]) for k in range(params.levels))
    return [Check("11", f"vectorised encoder equals naive evaluation on [1, {params.n_max}]",
                  all(results.values()), results, {k: True for k in results})]


def verify(scope: str = "all", store=None, n_max: int = E.FULL_N) -> list[Check]:
    scopes = SCOPES if scope == "all" else (scope,)
    checks: list[Check] = []
    for name in scopes:
        if name == "primes":
            hier = obtain("primes", n_max, store)
            checks += prime_checks(hier)
            checks += reconstruction_checks(hier)
        elif name == "twins":
            checks += twin_checks(obtain("twins", n_max, store), min(E.TWIN_LEVEL3_N, n_max))
        elif name == "mersenne":
            checks += mersenne_checks()
        elif name == "properties":
            checks += oracle_checks()
            checks += property_checks()
        else:
            raise ValueError(f"unknown scope {name!r}; choose from {SCOPES + ('all',)}")
    return checks


def as_payload(checks: list[Check]) -> dict:
    return {
        "passed": all(c.passed for c in checks),
        "checks": [asdict(c) for c in checks],
    }
