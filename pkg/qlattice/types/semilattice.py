# -*- coding: utf-8 -*-
import numpy as np

from .base import Type
from ..base import Property
from ..functions import bits


class Semilattice(Type):
    """Finite join-semilattice with 0.

    The carrier is ``range(size)`` and the zero is always index 0; the
    greatest element is derived as the join of every element. Construction
    does not check the axioms: use :func:`~.semilattice.validate` for
    untrusted tables."""

    join = Property(np.ndarray, readonly=True,
                    doc="Square table of joins, ``join[a, b] = a + b``")
    labels = Property(tuple, default=None, readonly=True,
                      doc="Display name of each element. Default indices.")
    source_order = Property(tuple, default=None, readonly=True,
                            doc="Input index of each element, when the input "
                                "zero was not at index 0.")

    def __init__(self, join, labels=None, source_order=None, *args,
                 **kwargs):
        join = np.array(join, dtype=int)
        join.flags.writeable = False
        if labels is None:
            labels = tuple(str(index) for index in range(len(join)))
        if source_order is None:
            source_order = tuple(range(len(join)))
        super().__init__(join, tuple(labels), tuple(source_order),
                         *args, **kwargs)

    @property
    def size(self):
        return len(self.join)

    @property
    def zero(self):
        return 0

    @property
    def top(self):
        top = 0
        for element in range(self.size):
            top = self.join[top, element]
        return int(top)

    @property
    def order(self):
        """Boolean matrix with ``order[a, b]`` iff ``a <= b``."""
        return self.join == np.arange(self.size)[np.newaxis, :]

    def leq(self, a, b):
        return self.join[a, b] == b

    def join_all(self, elements):
        """Join of an iterable of elements; the empty join is 0."""
        result = 0
        for element in elements:
            result = self.join[result, element]
        return int(result)

    def nonzero(self):
        return range(1, self.size)

    def __eq__(self, other):
        return isinstance(other, Semilattice) \
            and np.array_equal(self.join, other.join)

    def __hash__(self):
        return hash(self.join.tobytes())


class Ideal(Type):
    """Ideal of a semilattice, as a membership bitmask."""

    mask = Property(int, readonly=True, doc="Bit ``i`` set iff ``i`` in ideal")

    @property
    def members(self):
        return tuple(bits(self.mask))

    def __contains__(self, element):
        return bool(self.mask >> int(element) & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def label(self, labels=None):
        return "{" + ",".join(
            labels[member] if labels else str(member)
            for member in self.members) + "}"
