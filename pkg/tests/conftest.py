from pathlib import Path

import pytest

from core.log import set_quiet
from geometry.configuration import load_configuration
from symmetry.builtin_groups import parse_group_spec
from symmetry.matrix_group import ElementTuple

DATA = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def quiet_logs():
    set_quiet(True)
    yield
    set_quiet(False)


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def c4():
    return parse_group_spec("c4:rotation2d")


@pytest.fixture
def hyper3():
    return parse_group_spec("hyperoctahedral:3")


@pytest.fixture
def rotation_tuple(c4):
    """(R90, R180, R270)."""
    return ElementTuple(c4, (1, 2, 3))


@pytest.fixture
def identity_tuple(c4):
    return ElementTuple(c4, (0, 0, 0))


@pytest.fixture
def square():
    return load_configuration(DATA / "square.json")


@pytest.fixture
def generic_circle():
    return load_configuration(DATA / "generic_circle.json")


@pytest.fixture
def octahedron():
    return load_configuration(DATA / "octahedron.json")
