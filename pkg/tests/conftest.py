import pytest

from qsl.aqmat import algebra


@pytest.fixture(scope="session")
def alg11():
    return algebra(1, 1)


@pytest.fixture(scope="session")
def alg21():
    return algebra(2, 1)


@pytest.fixture(scope="session")
def alg12():
    return algebra(1, 2)
