# -*- coding: utf-8 -*-
from .base import Type
from .relation import Congruence
from ..base import Property
from ..functions import bits


class StarFilter(Type):
    """Order filter of a semilattice, as a membership bitmask.

    Whether it satisfies condition (*) for a monoid is checked by
    :func:`~.analysis.operators.check_star_condition`."""

    mask = Property(int, readonly=True)

    @property
    def members(self):
        return tuple(bits(self.mask))

    def __contains__(self, element):
        return bool(self.mask >> int(element) & 1)

    def __eq__(self, other):
        return isinstance(other, StarFilter) and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)


class StarInterval(Type):
    """Congruences whose top block is a given filter."""

    filter = Property(StarFilter, readonly=True)
    phi = Property(Congruence, readonly=True,
                   doc="Least congruence with the filter as top block")
    psi = Property(Congruence, readonly=True,
                   doc="Greatest congruence with the filter as top block")
    members = Property(tuple, readonly=True,
                       doc="All congruences with the filter as top block")


class PseudopropResult(Type):
    """Outcome of the pseudo-one equalisation search."""

    element = Property(int, readonly=True,
                       doc="Least equalising element, or None")
    witnesses = Property(dict, readonly=True,
                         doc="Least equaliser j per (s, operator name)")
    note = Property(str, default=None, readonly=True)

    @property
    def passed(self):
        return self.element is not None
