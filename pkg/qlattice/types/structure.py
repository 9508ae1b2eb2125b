# -*- coding: utf-8 -*-
import numpy as np

from .base import Type
from .semilattice import Semilattice
from ..base import Property
from ..functions import partition_blocks


class FiniteStructure(Type):
    """Finite carrier with unary operations, constants and unary
    predicates."""

    size = Property(int, readonly=True, doc="Carrier size")
    operations = Property(dict, default=None, readonly=True,
                          doc="Function symbol to tuple of images")
    constants = Property(dict, default=None, readonly=True,
                         doc="Constant symbol to element")
    predicates = Property(dict, default=None, readonly=True,
                          doc="Predicate symbol to frozenset extension")
    labels = Property(tuple, default=None, readonly=True)

    def __init__(self, size, operations=None, constants=None, predicates=None,
                 labels=None, *args, **kwargs):
        if labels is None:
            labels = tuple(str(index) for index in range(size))
        super().__init__(
            size,
            {name: tuple(images) for name, images in (operations or {}).items()},
            dict(constants or {}),
            {name: frozenset(extension)
             for name, extension in (predicates or {}).items()},
            tuple(labels), *args, **kwargs)

    def atoms(self):
        """The structure's own predicate facts as ``(predicate, element)``."""
        return frozenset((name, element)
                         for name, extension in self.predicates.items()
                         for element in extension)

    def quotient(self, congruence):
        """Quotient by a :class:`StructureCongruence`, blocks in order."""
        blocks = partition_blocks(congruence.theta0)
        position = {rep: index for index, rep in
                    enumerate(block[0] for block in blocks)}
        reps = congruence.theta0

        def image(element):
            return position[reps[element]]
        return FiniteStructure(
            len(blocks),
            {name: [image(images[block[0]]) for block in blocks]
             for name, images in self.operations.items()},
            {name: image(element) for name, element in self.constants.items()},
            {name: {image(element) for predicate, element in congruence.theta1
                    if predicate == name}
             for name in self.predicates},
            ["/".join(self.labels[x] for x in block) for block in blocks])


class StructureCongruence(Type):
    """Pair of an equivalence and a predicate extension on a structure.

    The extension contains the structure's own facts and is closed under
    the equivalence."""

    theta0 = Property(tuple, readonly=True,
                      doc="Least-representative partition of the carrier")
    theta1 = Property(frozenset, readonly=True,
                      doc="Set of ``(predicate, element)`` facts")

    def __init__(self, theta0, theta1, *args, **kwargs):
        super().__init__(tuple(theta0), frozenset(theta1), *args, **kwargs)

    def pairs(self):
        """``(x, rep)`` for every element outside its representative."""
        return [(x, rep) for x, rep in enumerate(self.theta0) if x != rep]

    def __le__(self, other):
        return self.theta1 <= other.theta1 and all(
            other.theta0[x] == other.theta0[rep]
            for x, rep in enumerate(self.theta0))

    def __eq__(self, other):
        return isinstance(other, StructureCongruence) \
            and (self.theta0, self.theta1) == (other.theta0, other.theta1)

    def __hash__(self):
        return hash((self.theta0, self.theta1))

    def sort_key(self):
        rank = len(self.theta0) - len(set(self.theta0))
        return (rank + len(self.theta1), tuple(-rep for rep in self.theta0),
                tuple(sorted(self.theta1)))

    def label(self, structure):
        """Blocks, then the facts added to the structure's own."""
        blocks = "|".join(
            ",".join(structure.labels[x] for x in block)
            for block in partition_blocks(self.theta0))
        facts = ",".join(
            "{}({})".format(predicate, structure.labels[element])
            for predicate, element in sorted(self.theta1 - structure.atoms()))
        return "<{};{}>".format(blocks, facts)


class CompactConSemilattice(Type):
    """Join-semilattice of the K-congruences of a finite structure, with the
    operators induced by structure endomorphisms."""

    structure = Property(FiniteStructure, readonly=True)
    laws = Property(tuple, readonly=True, doc="Governing quasi-identities")
    elements = Property(tuple, readonly=True,
                        doc="K-congruences, least first")
    join = Property(np.ndarray, readonly=True, doc="Index table of joins")
    operators = Property(dict, default=None,
                         doc="Endomorphism name to induced operator")

    def __init__(self, structure, laws, elements, join, operators=None,
                 *args, **kwargs):
        join = np.array(join, dtype=int)
        join.flags.writeable = False
        super().__init__(structure, tuple(laws), tuple(elements), join,
                         dict(operators or {}), *args, **kwargs)

    @property
    def zero(self):
        return 0

    def __len__(self):
        return len(self.elements)

    def index(self, congruence):
        return self.elements.index(congruence)

    def as_semilattice(self):
        return Semilattice(
            self.join,
            [element.label(self.structure) for element in self.elements])
