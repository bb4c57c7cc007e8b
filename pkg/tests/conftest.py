import numpy as np
import pytest
from hypothesis import settings

from symcone import jordan
from symcone.cone import cone_from_algebra

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []

SMALL_FAMILIES = [
    jordan.Orthant(3),
    jordan.Spin(3),
    jordan.Spin(5),
    jordan.SymMatrices(2),
    jordan.SymMatrices(3),
    jordan.DirectSum((jordan.Spin(3), jordan.Orthant(2))),
]


def family_id(desc):
    return desc.name


@pytest.fixture(params=SMALL_FAMILIES, ids=family_id)
def alg(request):
    return jordan.make_algebra(request.param)


@pytest.fixture
def cone(alg):
    return cone_from_algebra(alg)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
