import numpy as np
import pytest

from multiscale import storage
from multiscale.encoding import EncodingParams, Hierarchy, LevelSequence, build_hierarchy
from multiscale.errors import MissingDataError
from multiscale.primes import prime_chain
from multiscale.verify import as_payload, obtain, oracle_checks, prime_checks, property_checks, verify


def tampered(hier, index, value):
    level1 = hier[1].copy()
    level1[index] = value
    levels = (LevelSequence(1, level1),) + hier.levels[1:]
    return Hierarchy(hier.params, hier.tag, levels)


def test_tampered_level1_fails_restriction_naming_value(full_primes):
    checks = {c.id: c for c in prime_checks(tampered(full_primes, 1234, 42))}
    assert not checks["1"].passed
    assert "42" in checks["1"].note and "1234" in checks["1"].note
    assert not checks["2"].passed


def test_clean_build_passes_exact_checks(full_primes):
    checks = {c.id: c for c in prime_checks(full_primes)}
    for cid in ("1", "2", "5", "6", "7"):
        assert checks[cid].passed, checks[cid]


def test_twins_scope_on_prime_only_store(tmp_path):
    storage.save(build_hierarchy(prime_chain(), EncodingParams(n_max=512)), tmp_path / "primes.msp")
    with pytest.raises(MissingDataError, match="build --chain twins"):
        verify("twins", store=tmp_path)


def test_store_too_small_is_missing_data(tmp_path):
    storage.save(build_hierarchy(prime_chain(), EncodingParams(n_max=512)), tmp_path / "primes.msp")
    with pytest.raises(MissingDataError, match="--n-max 4096"):
        obtain("primes", 4096, tmp_path)


def test_properties_scope_passes():
    checks = oracle_checks(4096) + property_checks()
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]


def test_payload_is_machine_readable():
    checks = property_checks()
    payload = as_payload(checks)
    assert payload["passed"] is True
    assert {"id", "name", "passed", "measured", "expected", "tolerance", "note"} <= set(payload["checks"][0])


def test_unknown_scope():
    with pytest.raises(ValueError):
        verify("bogus")
