# -*- coding: utf-8 -*-
"""Plain text output: stable ``key=value``, element, cover and ``CHECK``
lines."""
from ..base import Property
from ..presentation.text import render
from .base import Writer


class LatticeWriter(Writer):
    """Lattice as an element list or a cover edge list.

    ``text`` gives ``size=<n>`` then ``element <index> <label>`` lines;
    ``edges`` gives ``cover <lower-label> <upper-label>`` lines."""
    format = Property(str, default='text', doc="``'text'`` or ``'edges'``")

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        if self.format not in ('text', 'edges'):
            raise ValueError("unknown lattice format {!r}".format(self.format))

    def lines(self, lattice):
        labels = lattice.labels
        if self.format == 'edges':
            return ["cover {} {}".format(labels[lower], labels[upper])
                    for lower, upper in lattice.covers()]
        return ["size={}".format(lattice.size)] + [
            "element {} {}".format(index, label)
            for index, label in enumerate(labels)]


class ReportWriter(Writer):
    """Report as ``key=value`` lines followed by ``CHECK`` lines and
    ``#`` notes."""

    def lines(self, report):
        return report.lines()


class PresentationWriter(Writer):
    """Presentation in its canonical text form."""

    def lines(self, presentation):
        return render(presentation).splitlines()
