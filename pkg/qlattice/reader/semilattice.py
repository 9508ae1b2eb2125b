# -*- coding: utf-8 -*-
"""Reader for the semilattice text format.

.. code-block:: text

    # S22 with the swap
    semilattice 4
    join 0 1 2 3 1 1 3 3 2 3 2 3 3 3 3 3
    zero 0
    labels 0 a b 1
    op s 0 2 1 3
    end

Several blocks may follow each other; each yields one
``(semilattice, monoid)`` pair. Operator images are given in input indices
and translated when the zero is not element 0.
"""
from ..base import Property
from ..exceptions import ParseError
from ..monoid import CLOSURE_BOUND, monoid_closure
from ..semilattice import from_source, validate
from ..types.operator import Operator
from .file import TextFileReader

GRAMMAR = """\
semilattice file (one item per line, '#' starts a comment):
  semilattice <n>
  join <n*n indices, row-major>
  zero <i>
  labels <n names>        (optional)
  op <name> <n images>    (repeatable)
  end"""


def _integers(words, number):
    try:
        return [int(word) for word in words]
    except ValueError:
        raise ParseError("expected integers", number, 1) from None


def _build(block, number, bound):
    if 'join' not in block:
        raise ParseError("missing join", number, 1)
    if 'zero' not in block:
        raise ParseError("missing zero", number, 1)
    semilattice = validate(block['size'], block['join'], block['zero'],
                           block.get('labels'))
    generators = [Operator(from_source(semilattice, images), name)
                  for name, images in block['ops']]
    return semilattice, monoid_closure(generators, semilattice, bound)


def parse_semilattices(lines, closure_bound=CLOSURE_BOUND):
    """Instances from ``(line number, content)`` pairs.

    Raises
    ------
    ParseError
        For malformed lines, with the line number.
    SemilatticeError, OperatorError, ClosureBoundError
        For well-formed input that fails validation.
    """
    block = None
    for number, content in lines:
        if not content:
            continue
        keyword, *words = content.split()
        if keyword == 'semilattice':
            if block is not None:
                raise ParseError("'semilattice' inside a block", number, 1)
            size = _integers(words, number)
            if len(size) != 1:
                raise ParseError("semilattice takes one size", number, 1)
            block = {'size': size[0], 'ops': []}
            continue
        if block is None:
            raise ParseError("expected 'semilattice'", number, 1)
        if keyword == 'join':
            block['join'] = _integers(words, number)
        elif keyword == 'zero':
            zero = _integers(words, number)
            if len(zero) != 1:
                raise ParseError("zero takes one index", number, 1)
            block['zero'] = zero[0]
        elif keyword == 'labels':
            block['labels'] = words
        elif keyword == 'op':
            if not words:
                raise ParseError("op needs a name", number, 1)
            block['ops'].append((words[0], _integers(words[1:], number)))
        elif keyword == 'end':
            yield _build(block, number, closure_bound)
            block = None
        else:
            raise ParseError("unknown keyword {!r}".format(keyword),
                             number, 1)
    if block is not None:
        raise ParseError("missing 'end'", number, 1)


class SemilatticeReader(TextFileReader):
    """Reads ``(semilattice, monoid)`` instances from a semilattice file."""
    closure_bound = Property(int, default=CLOSURE_BOUND,
                             doc="Largest monoid closure")

    def records_gen(self):
        yield from parse_semilattices(self.lines(), self.closure_bound)
