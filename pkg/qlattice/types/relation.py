# -*- coding: utf-8 -*-
import numpy as np

from .base import Type
from ..base import Property
from ..functions import bits, mask_of, partition_blocks


class Congruence(Type):
    """Compatible equivalence relation, in least-representative form."""

    partition = Property(tuple, readonly=True,
                         doc="Least index of the block of each element")

    def __init__(self, partition, *args, **kwargs):
        super().__init__(tuple(int(rep) for rep in partition),
                         *args, **kwargs)

    @property
    def size(self):
        return len(self.partition)

    @property
    def blocks(self):
        return partition_blocks(self.partition)

    @property
    def rank(self):
        """Carrier size minus number of blocks; 0 for the identity."""
        return self.size - len(set(self.partition))

    def related(self, x, y):
        return self.partition[x] == self.partition[y]

    def block(self, x):
        return tuple(y for y, rep in enumerate(self.partition)
                     if rep == self.partition[x])

    def pairs(self):
        """Related pairs ``(x, y)`` with ``x < y``."""
        return [(x, y) for x in range(self.size)
                for y in range(x + 1, self.size) if self.related(x, y)]

    def __le__(self, other):
        return all(other.related(x, rep)
                   for x, rep in enumerate(self.partition))

    def __eq__(self, other):
        return isinstance(other, Congruence) \
            and self.partition == other.partition

    def __hash__(self):
        return hash(self.partition)

    def sort_key(self):
        return self.rank, tuple(-rep for rep in self.partition)

    def label(self, labels=None):
        return "|".join(
            ",".join(labels[x] if labels else str(x) for x in block)
            for block in self.blocks)

    @classmethod
    def identity(cls, size):
        return cls(range(size))

    @classmethod
    def universal(cls, size):
        return cls([0] * size)


class EonRelation(Type):
    """Reflexive transitive compatible relation inside the order.

    Stored as one bitmask row per element: bit ``y`` of row ``x`` is set iff
    ``x R y``."""

    rows = Property(tuple, readonly=True, doc="Row bitmasks")

    @property
    def size(self):
        return len(self.rows)

    @property
    def matrix(self):
        return np.array([[bool(row >> y & 1) for y in range(self.size)]
                         for row in self.rows], dtype=bool).reshape(
                             self.size, self.size)

    def related(self, x, y):
        return bool(self.rows[x] >> y & 1)

    def strict_pairs(self):
        return [(x, y) for x, row in enumerate(self.rows)
                for y in bits(row) if x != y]

    def __le__(self, other):
        return all(row & ~other_row == 0
                   for row, other_row in zip(self.rows, other.rows))

    def __eq__(self, other):
        return isinstance(other, EonRelation) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def sort_key(self):
        return len(self.strict_pairs()), self.rows

    def label(self, labels=None):
        pairs = self.strict_pairs()
        if not pairs:
            return "id"
        return ",".join(
            "{}<{}".format(labels[x], labels[y]) if labels
            else "{}<{}".format(x, y) for x, y in pairs)

    @classmethod
    def from_matrix(cls, matrix):
        return cls(tuple(mask_of(np.flatnonzero(row)) for row in matrix))
