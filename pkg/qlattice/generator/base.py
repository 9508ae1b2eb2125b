# -*- coding: utf-8 -*-
from abc import abstractmethod

from ..base import Base


class InstanceGenerator(Base):
    """Instance generator base class

    Yields ``(semilattice, monoid)`` pairs for the verification suites, in a
    fixed order for a given configuration."""

    @abstractmethod
    def instances(self):
        """Generate instances

        Yields
        ------
        : tuple of (Semilattice, OperatorMonoid)
        """
        raise NotImplementedError

    def __iter__(self):
        return iter(self.instances())
