# -*- coding: utf-8 -*-
"""Base classes for different Readers."""
from abc import abstractmethod

from ..base import Base


class Reader(Base):
    """Reader base class

    Iterating a reader yields its records in input order; the latest record
    is kept in :attr:`current`."""
    current = None

    @abstractmethod
    def records_gen(self):
        """Returns a generator of records in input order."""
        raise NotImplementedError

    def __iter__(self):
        for record in self.records_gen():
            self.current = record
            yield record
