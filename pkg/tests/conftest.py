import pytest

from rsfq import FieldCtx, PolyRing


@pytest.fixture(scope="session")
def f3():
    return PolyRing(FieldCtx(3))


@pytest.fixture(scope="session")
def f5():
    return PolyRing(FieldCtx(5))


@pytest.fixture(scope="session")
def f9():
    return PolyRing(FieldCtx(3, 2))
