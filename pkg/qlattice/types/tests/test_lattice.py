# -*- coding: utf-8 -*-
import numpy as np
import pytest

from ..lattice import FiniteLattice


@pytest.fixture()
def diamond():
    """Four-element Boolean lattice 0 < a, b < 1."""
    leq = np.array([[1, 1, 1, 1],
                    [0, 1, 0, 1],
                    [0, 0, 1, 1],
                    [0, 0, 0, 1]], dtype=bool)
    return FiniteLattice(leq, labels=('0', 'a', 'b', '1'))


def test_bounds(diamond):
    assert diamond.size == 4
    assert diamond.bottom == 0
    assert diamond.top == 3
    assert diamond.join[1, 2] == 3
    assert diamond.meet[1, 2] == 0
    assert diamond.join_all([]) == 0
    assert diamond.join_all([1, 2]) == 3


def test_covers(diamond):
    assert diamond.covers() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert diamond.atoms() == [1, 2]
    assert diamond.coatoms() == [1, 2]
    assert diamond.lower_covers(3) == [1, 2]
    assert diamond.upper_covers(1) == [3]


def test_dual(diamond):
    dual = diamond.dual()
    assert dual.bottom == 3
    assert dual.join[1, 2] == 0
    assert dual.labels == diamond.labels


def test_from_order():
    lattice = FiniteLattice.from_order(
        [frozenset(), frozenset({1}), frozenset({1, 2})],
        frozenset.issubset, ['{}', '1', '12'])
    assert lattice.covers() == [(0, 1), (1, 2)]
    assert lattice.index(frozenset({1})) == 1


def test_not_a_lattice():
    # two incomparable maximal elements
    leq = np.array([[1, 1, 1],
                    [0, 1, 0],
                    [0, 0, 1]], dtype=bool)
    with pytest.raises(ValueError, match="not a lattice"):
        FiniteLattice(leq)
