# -*- coding: utf-8 -*-
import numpy as np
import pytest

from ..constructions import chain, co_lattice, dual_leaf
from ..properties import (
    atomistic, is_isomorphic, join_irreducibles, lattice_properties,
    lower_bounded, meet_semidistributive)
from ...types.lattice import FiniteLattice


def _lattice(size, covers):
    leq = np.eye(size, dtype=bool)
    for lower, upper in covers:
        leq[lower, upper] = True
    for middle in range(size):
        leq |= np.outer(leq[:, middle], leq[middle])
    return FiniteLattice(leq)


@pytest.fixture()
def m3():
    return _lattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


@pytest.fixture()
def n5():
    # 0 < 1 < 2 < 4 and 0 < 3 < 4
    return _lattice(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


@pytest.fixture()
def boolean():
    return _lattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_boolean(boolean):
    properties = lattice_properties(boolean)
    assert all(value for _, value in properties.items())


def test_m3(m3):
    assert not meet_semidistributive(m3)
    assert not meet_semidistributive(m3.dual())
    assert atomistic(m3)
    assert not lower_bounded(m3)


def test_n5(n5):
    properties = lattice_properties(n5)
    assert properties.sd_meet
    assert properties.sd_join
    assert not properties.atomistic
    assert properties.lower_bounded
    assert properties.upper_bounded
    assert join_irreducibles(n5) == {1: 0, 2: 1, 3: 0}


def test_chain():
    properties = lattice_properties(chain(3))
    assert properties.sd_meet
    assert not properties.atomistic
    assert properties.lower_bounded


def test_dual_leaf():
    lattice = dual_leaf()
    properties = lattice_properties(lattice)
    assert properties.sd_meet
    assert not properties.upper_bounded
    dual = lattice_properties(lattice.dual())
    assert dual.sd_join == properties.sd_meet
    assert dual.lower_bounded == properties.upper_bounded


def test_is_isomorphic(n5, m3):
    assert is_isomorphic(chain(2), co_lattice(1))
    assert not is_isomorphic(n5, m3)
    assert not is_isomorphic(chain(2), chain(3))
