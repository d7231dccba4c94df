import pytest

from gbcodes.gf import field_new
from gbcodes.orders import OrderSpec
from gbcodes.reference_examples import ternary_8_2_code, ternary_9_3_code


@pytest.fixture(scope="session")
def gf2():
    return field_new(2)


@pytest.fixture(scope="session")
def gf3():
    return field_new(3)


@pytest.fixture(scope="session")
def gf4():
    return field_new(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return field_new(5)


@pytest.fixture(scope="session")
def degrevlex():
    return OrderSpec("degrevlex")


@pytest.fixture(scope="session")
def deglex():
    return OrderSpec("deglex")


@pytest.fixture(scope="session")
def code_9_3():
    return ternary_9_3_code()


@pytest.fixture(scope="session")
def code_8_2():
    return ternary_8_2_code()
