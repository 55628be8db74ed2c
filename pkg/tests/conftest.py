import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from dclat import VertexColoredPoset, as_lattice, build_J, dcp

DATA = pathlib.Path(__file__).parent / "data"


def load(name: str):
    return dcp.parse((DATA / name).read_text())


@pytest.fixture(scope="session")
def fig_poset() -> VertexColoredPoset:
    return load("fig1P.dcp")


@pytest.fixture(scope="session")
def fig_lattice(fig_poset):
    return build_J(fig_poset).lattice


@pytest.fixture(scope="session")
def fig_view(fig_lattice):
    return as_lattice(fig_lattice)


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA
