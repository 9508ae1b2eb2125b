# -*- coding: utf-8 -*-
from ..base import Property
from ..presentation.text import parse, parse_laws
from ..types.presentation import Presentation
from .file import TextFileReader


class PresentationReader(TextFileReader):
    """Reads one presentation in the presentation text format."""

    def records_gen(self):
        yield parse(self.text())

    def read(self):
        return next(iter(self))


class LawReader(TextFileReader):
    """Reads laws, one per line, in the signature of a presentation."""
    context = Property(Presentation, default=None,
                       doc="Presentation resolving predicate symbols")

    def records_gen(self):
        yield from parse_laws(self.text(), self.context)
