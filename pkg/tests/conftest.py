"""
Shared fixtures for the reidemeister test suite
"""

from pathlib import Path

import numpy as np
import pytest

from reidemeister.groups.automorphisms import Automorphism, automorphism_from_images, identity_automorphism
from reidemeister.groups.finite_group import cyclic, dihedral, symmetric
from reidemeister.lattice.matrices import IntMatrix

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the full acceptance sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive acceptance sweep, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def c3():
    return cyclic(3)


@pytest.fixture
def c4():
    return cyclic(4)


@pytest.fixture
def s3():
    return symmetric(3)


@pytest.fixture
def d4():
    return dihedral(4)


@pytest.fixture
def inversion_c3(c3) -> Automorphism:
    return automorphism_from_images(c3, [1], [2])


@pytest.fixture
def inversion_c4(c4) -> Automorphism:
    return automorphism_from_images(c4, [1], [3])


@pytest.fixture
def id_s3(s3) -> Automorphism:
    return identity_automorphism(s3)


@pytest.fixture
def cat_map() -> IntMatrix:
    return IntMatrix.from_rows([[2, 1], [1, 1]])


@pytest.fixture
def minus_one() -> IntMatrix:
    return IntMatrix.from_rows([[-1]])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(7)
