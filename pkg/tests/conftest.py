import pathlib

import pytest

from k3pf import shapes
from k3pf.toric import FamilySpec
from k3pf.griffiths_dwork import picard_fuchs

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def octahedron():
    return shapes.octahedron()


@pytest.fixture(scope="session")
def cube():
    return shapes.cube()


@pytest.fixture(scope="session")
def twisted_octahedron():
    return shapes.twisted_octahedron()


@pytest.fixture(scope="session")
def rhombic_dodecahedron():
    return shapes.rhombic_dodecahedron()


@pytest.fixture(scope="session")
def square2d():
    return shapes.square()


@pytest.fixture(scope="session")
def twisted_spec(twisted_octahedron):
    return FamilySpec(twisted_octahedron)


@pytest.fixture(scope="session")
def cube_spec(cube):
    return FamilySpec(cube)


@pytest.fixture(scope="session")
def square_spec(square2d):
    return FamilySpec(square2d)


@pytest.fixture(scope="session")
def twisted_pf(twisted_spec):
    """The flagship operator, computed once per session (symmetric mode)."""
    return picard_fuchs(twisted_spec, max_order=4, use_symmetry=True)


@pytest.fixture(scope="session")
def cube_pf(cube_spec):
    return picard_fuchs(cube_spec, max_order=4, use_symmetry=True)


@pytest.fixture(scope="session")
def square_pf(square_spec):
    return picard_fuchs(square_spec, max_order=4)
