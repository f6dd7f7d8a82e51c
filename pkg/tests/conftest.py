import pytest

from mcda_select import Level, load_default_kb
from mcda_select.analyzer import enumerate_combinations, filter_valid


@pytest.fixture(scope="session")
def kb():
    return load_default_kb()


@pytest.fixture(scope="session")
def valid_l3_vectors():
    """All 4,536 valid level-3 vectors, enumeration order."""
    return tuple(filter_valid(enumerate_combinations(Level.L3), Level.L3))
