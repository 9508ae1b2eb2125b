# -*- coding: utf-8 -*-
import networkx as nx
import numpy as np

from .base import Type
from ..base import Property


class FiniteLattice(Type):
    """Finite lattice given by its order matrix.

    Join and meet tables are derived from :attr:`leq` on construction; a
    :class:`ValueError` is raised if some pair lacks a least upper or a
    greatest lower bound."""

    leq = Property(np.ndarray, readonly=True,
                   doc="Boolean matrix, ``leq[x, y]`` iff ``x <= y``")
    elements = Property(tuple, default=None, readonly=True,
                        doc="Underlying objects (congruences, sets, ...)")
    labels = Property(tuple, default=None, readonly=True,
                      doc="Display name of each element")

    def __init__(self, leq, elements=None, labels=None, *args, **kwargs):
        leq = np.array(leq, dtype=bool)
        leq.flags.writeable = False
        size = len(leq)
        if elements is None:
            elements = tuple(range(size))
        if labels is None:
            labels = tuple(str(index) for index in range(size))
        super().__init__(leq, tuple(elements), tuple(labels), *args, **kwargs)
        self.join = self._bounds(leq)
        self.meet = self._bounds(leq.T)

    @staticmethod
    def _bounds(leq):
        """Least upper bounds for every pair (greatest lower via ``leq.T``)."""
        size = len(leq)
        table = np.empty((size, size), dtype=int)
        for x in range(size):
            for y in range(x, size):
                upper = np.flatnonzero(leq[x] & leq[y])
                least = [z for z in upper if leq[z, upper].all()]
                if not least:
                    raise ValueError(
                        "not a lattice: no bound for ({},{})".format(x, y))
                table[x, y] = table[y, x] = least[0]
        table.flags.writeable = False
        return table

    @classmethod
    def from_order(cls, elements, less_equal, labels=None):
        """Lattice on `elements` ordered by the predicate `less_equal`."""
        elements = tuple(elements)
        leq = np.array([[less_equal(x, y) for y in elements]
                        for x in elements], dtype=bool).reshape(
                            len(elements), len(elements))
        return cls(leq, elements, labels)

    @property
    def size(self):
        return len(self.leq)

    @property
    def bottom(self):
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @property
    def top(self):
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    def index(self, element):
        return self.elements.index(element)

    def dual(self):
        return FiniteLattice(self.leq.T, self.elements, self.labels)

    def hasse_diagram(self):
        """Cover digraph, edges from lower to upper cover."""
        if getattr(self, "_hasse", None) is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(range(self.size))
            graph.add_edges_from(
                (int(x), int(y))
                for x, y in zip(*np.nonzero(self.leq)) if x != y)
            self._hasse = nx.transitive_reduction(graph)
        return self._hasse

    def covers(self):
        """Sorted ``(lower, upper)`` cover pairs."""
        return sorted(self.hasse_diagram().edges())

    def lower_covers(self, x):
        return sorted(self.hasse_diagram().predecessors(x))

    def upper_covers(self, x):
        return sorted(self.hasse_diagram().successors(x))

    def atoms(self):
        return self.upper_covers(self.bottom)

    def coatoms(self):
        return self.lower_covers(self.top)

    def join_all(self, elements):
        result = self.bottom
        for element in elements:
            result = self.join[result, element]
        return int(result)


class LatticeProperties(Type):
    """Property record of a finite lattice."""

    sd_meet = Property(bool, readonly=True, doc="Meet semidistributive")
    sd_join = Property(bool, readonly=True, doc="Join semidistributive")
    atomistic = Property(bool, readonly=True)
    coatomistic = Property(bool, readonly=True)
    lower_bounded = Property(bool, readonly=True,
                             doc="No cycle in the join-dependency relation")
    upper_bounded = Property(bool, readonly=True,
                             doc="Lower bounded dual")

    def items(self):
        return [(name, getattr(self, name)) for name in type(self).properties]
