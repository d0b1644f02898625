import pytest

from barrierlab import build_sieve


@pytest.fixture(scope="session")
def sieve_100k():
    return build_sieve(100_000)


@pytest.fixture(scope="session")
def sieve_2k():
    return build_sieve(2_000)
