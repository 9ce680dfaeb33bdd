import pytest

from primeladder.numtheory import sieve_primes


@pytest.fixture(scope="session")
def sieve_10k():
    return sieve_primes(10_000)


@pytest.fixture(scope="session")
def sieve_1m():
    return sieve_primes(1_000_000)
