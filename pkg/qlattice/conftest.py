# -*- coding: utf-8 -*-
from pathlib import Path

import pytest

from .fixtures import chain_semilattice, load_fixture
from .monoid import monoid_closure
from .types.operator import Operator


@pytest.fixture(scope='session')
def fixture_dir():
    """Directory of the sample input files."""
    return Path(__file__).parent.parent / 'fixtures'


@pytest.fixture(scope='session')
def trivial_instance():
    return load_fixture('trivial')


@pytest.fixture(scope='session')
def chain3_instance():
    return load_fixture('chain3')


@pytest.fixture(scope='session')
def s22_instance():
    return load_fixture('s22')


@pytest.fixture(scope='session')
def s22_swap_instance():
    return load_fixture('s22-swap')


@pytest.fixture(scope='session')
def collapse_instance():
    """Three-element chain with the idempotent map sending ``a`` to 0."""
    semilattice = chain_semilattice(3, ('0', 'a', '1'))
    return semilattice, monoid_closure(
        [Operator((0, 0, 2), 'c')], semilattice)
