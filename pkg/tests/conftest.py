import pytest

from tiltlab.hearts import Context
from tiltlab.quiver import Quiver

# Orientations fixed by the golden tests: A3 is the path 2 -> 1 -> 0 so that
# Ext^1(S2, S1) and Ext^1(S1, S0) are nonzero; A2 is 0 -> 1.
A2 = Quiver(2, ((0, 1),))
A3 = Quiver(3, ((2, 1), (1, 0)))
D4 = Quiver(4, ((1, 0), (2, 0), (3, 0)))


@pytest.fixture(scope="session")
def ctx_a2():
    return Context(A2)


@pytest.fixture(scope="session")
def ctx_a3():
    return Context(A3)


@pytest.fixture(scope="session")
def ctx_d4():
    return Context(D4)
