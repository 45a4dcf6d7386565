import shutil
from pathlib import Path

import pytest
from hypothesis import settings

from ia_nilpotent.groups.pcgroup import (
    cyclic,
    dihedral,
    direct_product,
    heisenberg,
    paper_example_32,
    quaternion_generalized,
)

FIXTURES = Path(__file__).resolve().parent.parent / "ia_nilpotent" / "groups" / "fixtures"

settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def q8():
    return quaternion_generalized(8)


@pytest.fixture(scope="session")
def d8():
    return dihedral(8)


@pytest.fixture(scope="session")
def q8xc4(q8):
    return direct_product(q8, cyclic(4))


@pytest.fixture(scope="session")
def heis3():
    return heisenberg(3)


@pytest.fixture(scope="session")
def example32():
    return paper_example_32()


@pytest.fixture(scope="session")
def c12():
    return cyclic(12)


@pytest.fixture
def fixture_dir():
    return FIXTURES


@pytest.fixture
def corpus_dir(tmp_path):
    """A user corpus with one presentation file"""
    shutil.copy(FIXTURES / "q8.pc", tmp_path / "q8.pc")
    return tmp_path
