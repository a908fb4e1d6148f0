import pytest

from xsq import QQ, ConstructionData, build_skeleton


@pytest.fixture(scope="session")
def data_a():
    return ConstructionData(QQ, ["x"], [("S", "x^2")], [])


@pytest.fixture(scope="session")
def data_b():
    return ConstructionData(QQ, ["x", "y"],
                            [("S1", "x^2"), ("S2", "x*y")], [])


@pytest.fixture(scope="session")
def data_c():
    return ConstructionData(QQ, ["x", "y"],
                            [("S1", "x^2"), ("S2", "x*y")],
                            [("T", "y*S1 - x*S2")])


@pytest.fixture(scope="session")
def skel_a(data_a):
    return build_skeleton(data_a)


@pytest.fixture(scope="session")
def skel_b(data_b):
    return build_skeleton(data_b)


@pytest.fixture(scope="session")
def skel_c(data_c):
    return build_skeleton(data_c)
