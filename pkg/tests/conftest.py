from math import comb

import pytest


def comb_ref(n, k):
    """Stdlib binomial, independent of the gmpy2-backed library path."""
    return comb(n, k) if 0 <= k <= n else 0


def primes_upto(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


@pytest.fixture(scope="session")
def small_primes():
    return primes_upto(1000)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
