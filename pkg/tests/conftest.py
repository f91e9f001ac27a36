import pytest

import helpers


@pytest.fixture(scope="session")
def a2():
    return helpers.A2


@pytest.fixture(scope="session")
def a3():
    return helpers.A3


@pytest.fixture(scope="session")
def b2():
    return helpers.B2


@pytest.fixture(scope="session")
def b3():
    return helpers.B3


@pytest.fixture(scope="session")
def a1a1():
    return helpers.A1A1


@pytest.fixture(scope="session")
def a2t():
    return helpers.A2T


@pytest.fixture(scope="session")
def dinf():
    return helpers.DINF


@pytest.fixture(scope="session")
def u3():
    return helpers.U3
