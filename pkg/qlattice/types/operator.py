# -*- coding: utf-8 -*-
import numpy as np

from .base import Type
from .semilattice import Semilattice
from ..base import Property


class Operator(Type):
    """Self-map of a semilattice carrier, given by its images."""

    images = Property(tuple, readonly=True, doc="Image of each element")
    name = Property(str, default=None, readonly=True, doc="Symbol name")

    def __init__(self, images, name=None, *args, **kwargs):
        super().__init__(tuple(int(image) for image in images), name,
                         *args, **kwargs)

    def __call__(self, element):
        return self.images[element]

    def __len__(self):
        return len(self.images)

    def compose(self, other):
        """The composite ``self ∘ other``, i.e. ``x ↦ self(other(x))``."""
        return Operator(self.images[image] for image in other.images)

    @classmethod
    def identity(cls, size, name="i"):
        return cls(range(size), name)

    def __eq__(self, other):
        return isinstance(other, Operator) and self.images == other.images

    def __hash__(self):
        return hash(self.images)


class MonoidFlags(Type):
    """Verified property flags of an operator monoid."""

    reductive = Property(bool, readonly=True,
                         doc="For all f, g some h has f = h∘g or g = h∘f")
    right_cancellative = Property(bool, readonly=True,
                                  doc="g∘f = h∘f implies g = h")
    is_group = Property(bool, readonly=True,
                        doc="Every element has a two-sided inverse")
    fixes_top = Property(bool, readonly=True,
                         doc="Every element maps the top to itself")
    witnesses = Property(dict, default=None, readonly=True,
                         doc="Counterexample element names per false flag")

    def items(self):
        return [(name, getattr(self, name))
                for name in ('reductive', 'right_cancellative', 'is_group',
                             'fixes_top')]


class OperatorMonoid(Type):
    """Composition-closed set of operators containing the identity.

    The identity is always element 0. ``composition[i, j]`` is the index of
    ``elements[i] ∘ elements[j]``."""

    semilattice = Property(Semilattice, readonly=True)
    elements = Property(tuple, readonly=True, doc="Operators, identity first")
    composition = Property(np.ndarray, readonly=True,
                           doc="Index table of pairwise composites")
    flags = Property(MonoidFlags, default=None, readonly=True)

    def __init__(self, semilattice, elements, composition, flags=None,
                 *args, **kwargs):
        composition = np.array(composition, dtype=int)
        composition.flags.writeable = False
        super().__init__(semilattice, tuple(elements), composition, flags,
                         *args, **kwargs)
        self._index = {operator: index
                       for index, operator in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    @property
    def names(self):
        return tuple(operator.name for operator in self.elements)

    @property
    def is_trivial(self):
        return len(self.elements) == 1

    def index(self, operator):
        return self._index[operator]

    def by_name(self, name):
        return self.elements[self.names.index(name)]

    def compose(self, i, j):
        """Index of ``elements[i] ∘ elements[j]``."""
        return int(self.composition[i, j])

    @property
    def reductive(self):
        return self.flags.reductive

    @property
    def right_cancellative(self):
        return self.flags.right_cancellative

    @property
    def is_group(self):
        return self.flags.is_group

    @property
    def fixes_top(self):
        return self.flags.fixes_top
