# -*- coding: utf-8 -*-
from abc import abstractmethod
from io import StringIO

from ..base import Base


class Writer(Base):
    """Writer base class

    Renders results as lines of text and writes them out to a stream."""

    @abstractmethod
    def lines(self, item):
        """Lines rendering `item`, without line terminators."""
        raise NotImplementedError

    def write(self, item, stream):
        for line in self.lines(item):
            stream.write(line + "\n")

    def dumps(self, item):
        """Return `item` rendered as a string."""
        stream = StringIO()
        self.write(item, stream)
        return stream.getvalue()
