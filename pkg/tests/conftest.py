import pytest

from multiscale.encoding import EncodingParams, build_hierarchy
from multiscale.expected import FULL_N
from multiscale.mersenne import mersenne_chain
from multiscale.primes import prime_chain
from multiscale.twins import twin_chain


def naive_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@pytest.fixture(scope="session")
def small_primes():
    return build_hierarchy(prime_chain(), EncodingParams(n_max=512 * 64))


@pytest.fixture(scope="session")
def full_primes():
    return build_hierarchy(prime_chain(), EncodingParams(n_max=FULL_N))


@pytest.fixture(scope="session")
def full_twins():
    return build_hierarchy(twin_chain(), EncodingParams(n_max=FULL_N))


@pytest.fixture(scope="session")
def million_primes():
    return build_hierarchy(prime_chain(), EncodingParams.covering(10**6))


@pytest.fixture(scope="session")
def chains():
    return {"primes": prime_chain(), "twins": twin_chain(), "mersenne": mersenne_chain()}


_acceptance_lines = []


@pytest.fixture
def record_criterion(request):
    """Register a criterion line; the outcome is filled in after the test runs."""
    entries = []

    def record(label):
        entries.append(label)

    yield record
    failed = getattr(request.node, "rep_call", None)
    status = "PASS" if failed is not None and failed.passed else "FAIL"
    for label in entries:
        _acceptance_lines.append(f"{status}  {label}")


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
