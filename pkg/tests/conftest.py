import pytest

from qrdynamics.maps import MapKind, MapSpec

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def p_demo():
    return MapSpec.demo(MapKind.POLY_P)


@pytest.fixture
def f_spec():
    return MapSpec.demo(MapKind.DYADIC_F)


@pytest.fixture
def h_spec():
    return MapSpec.demo(MapKind.STRETCH_H)


@pytest.fixture
def g_demo():
    return MapSpec.demo(MapKind.DEGREE_G)


@pytest.fixture
def ft_small():
    return MapSpec(MapKind.TRANSCENDENTAL_FT, delta=0.001)
