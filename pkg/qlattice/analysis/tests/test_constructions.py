# -*- coding: utf-8 -*-
from ..constructions import adjoin_bottom, chain, co_lattice, dual_leaf


def test_chain():
    lattice = chain(3)
    assert lattice.size == 3
    assert lattice.covers() == [(0, 1), (1, 2)]


def test_co_lattice():
    lattice = co_lattice(4)
    assert lattice.size == 11  # empty set and ten intervals
    assert lattice.labels[0] == "{}"
    assert lattice.labels[-1] == "1234"
    assert lattice.atoms() == [1, 2, 3, 4]


def test_adjoin_bottom():
    lattice = adjoin_bottom(chain(2))
    assert lattice.size == 3
    assert lattice.labels == ("o", "0", "1")
    assert lattice.bottom == 0


def test_dual_leaf():
    lattice = dual_leaf()
    assert lattice.size == 12
    # the adjoined bottom becomes the top
    assert lattice.labels[lattice.top] == "o"
