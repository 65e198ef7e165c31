import pytest

from satorder.posets import (
    antichain,
    chain,
    n_poset,
    skew_towers,
    topped_two_two,
    two_plus_two,
)
from satorder.verify import all_posets


@pytest.fixture
def tpt():
    return two_plus_two()


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def anti2():
    return antichain(2)


@pytest.fixture
def nposet():
    return n_poset()


@pytest.fixture
def topped():
    return topped_two_two()


@pytest.fixture
def towers2():
    return skew_towers(2)


@pytest.fixture(scope="session")
def corpus():
    """All naturally labeled posets per size, up to n = 5."""
    return {n: list(all_posets(n)) for n in range(6)}
