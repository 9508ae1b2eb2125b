# -*- coding: utf-8 -*-
"""Small lattices used as fixtures."""
import numpy as np

from ..types.lattice import FiniteLattice


def chain(size):
    """Chain ``0 < 1 < ... < size-1``."""
    return FiniteLattice(np.triu(np.ones((size, size), dtype=bool)))


def co_lattice(size):
    """Convex subsets of a `size`-element chain, ordered by inclusion.

    Elements are ``frozenset`` of ``1..size``, the empty set first."""
    intervals = [frozenset()] + [
        frozenset(range(low, high + 1))
        for low in range(1, size + 1) for high in range(low, size + 1)]
    intervals.sort(key=lambda subset: (len(subset), sorted(subset)))
    labels = ["".join(str(member) for member in sorted(subset)) or "{}"
              for subset in intervals]
    return FiniteLattice.from_order(intervals, frozenset.issubset, labels)


def adjoin_bottom(lattice, label="o"):
    """New least element below `lattice`, placed first."""
    size = lattice.size
    leq = np.zeros((size + 1, size + 1), dtype=bool)
    leq[0] = True
    leq[1:, 1:] = lattice.leq
    return FiniteLattice(leq, (None,) + lattice.elements,
                         (label,) + lattice.labels)


def dual_leaf():
    """Order dual of a new bottom below the convex subsets of a 4-chain."""
    return adjoin_bottom(co_lattice(4)).dual()
