import pytest

from lpairs import character, compute_zeros


@pytest.fixture(scope="session")
def chi3():
    return character(3, 1)


@pytest.fixture(scope="session")
def chi5():
    """The quadratic (Legendre-symbol) character mod 5."""
    return character(5, 2)


@pytest.fixture(scope="session")
def zeros100():
    return compute_zeros(100.0)


@pytest.fixture(scope="session")
def zeros1000():
    return compute_zeros(1000.0)


@pytest.fixture(scope="session")
def zeros5000():
    return compute_zeros(5000.0)
