import pytest

from kramanujan import sieve_upto


@pytest.fixture(scope="session")
def store_60k():
    # reaches past 58890, enough for every fast-path computation
    return sieve_upto(60_000)


@pytest.fixture(scope="session")
def store_10m():
    return sieve_upto(10_000_000)
