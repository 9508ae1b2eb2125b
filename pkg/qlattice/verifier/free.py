# -*- coding: utf-8 -*-
"""One-generated free structures of the presentations and their
endomorphisms.

For the combined presentation of ``(S, +, 0, M)`` the carrier is the terms
``f(x)``, one per monoid element ``f`` and listed in monoid order (so ``x``
is element 0), followed by the constant ``w``. Symbols act on terms by
``g(f(x)) = (f∘g)(x)``.
"""
from ..exceptions import EndomorphismError
from ..monoid import trivial_monoid
from ..presentation.emitter import predicate_name
from ..types.operator import Operator
from ..types.structure import FiniteStructure

STYLES = ('combined', 'second', 'first')


def free_structure(semilattice, monoid=None, style='combined'):
    """Free structure on one generator ``x``.

    On the one-element semilattice the laws ``x = e`` and ``x = w``
    collapse the second and combined carriers to a single element.

    Parameters
    ----------
    style : str
        ``'combined'`` (carrier ``{f(x) : f ∈ M} ∪ {w}``), ``'second'``
        (``{x, e}``, every predicate at ``e`` only) or ``'first'``
        (``{x}``, no predicate true).
    """
    names = [predicate_name(semilattice, s) for s in semilattice.nonzero()]
    if style == 'first':
        return FiniteStructure(1, predicates={name: () for name in names},
                               labels=['x'])
    if style == 'second':
        if not names:
            return FiniteStructure(1, constants={'e': 0}, labels=['x'])
        return FiniteStructure(2, constants={'e': 1},
                               predicates={name: {1} for name in names},
                               labels=['x', 'e'])
    if style != 'combined':
        raise ValueError("unknown presentation style {!r}".format(style))
    if monoid is None:
        monoid = trivial_monoid(semilattice)
    if not names:
        return FiniteStructure(
            1, {name: [0] for name in monoid.names}, {'w': 0},
            labels=['w'])
    size = len(monoid)
    w = size
    operations = {
        operator.name: [monoid.compose(g, f) for g in range(size)] + [w]
        for f, operator in enumerate(monoid.elements)}
    predicates = {
        predicate_name(semilattice, a): {
            g for g, operator in enumerate(monoid.elements)
            if operator(a) == semilattice.zero} | {w}
        for a in semilattice.nonzero()}
    labels = ['x'] + ["{}(x)".format(name) for name in monoid.names[1:]] \
        + ['w']
    return FiniteStructure(size + 1, operations, {'w': w}, predicates,
                           labels)


def is_endomorphism(structure, images):
    """Whether `images` preserves operations, constants and predicates."""
    if any(images[value] != value for value in structure.constants.values()):
        return False
    for table in structure.operations.values():
        if any(images[table[x]] != table[images[x]]
               for x in range(structure.size)):
            return False
    return all(images[x] in extension
               for extension in structure.predicates.values()
               for x in extension)


def endomorphisms(structure):
    """Every endomorphism of `structure`, as :class:`~.Operator` maps in
    lexicographic order of their images.

    Backtracks over the images of elements in carrier order, pruning on
    predicates and on every operation whose argument and value are both
    already mapped."""
    size = structure.size
    images = [0] * size
    found = []

    def consistent(position):
        value = images[position]
        if any(position in extension and value not in extension
               for extension in structure.predicates.values()):
            return False
        return all(images[table[y]] == table[images[y]]
                   for table in structure.operations.values()
                   for y in range(position + 1) if table[y] <= position)

    def extend(position):
        if position == size:
            if is_endomorphism(structure, images):
                found.append(Operator(images))
            return
        for value in range(size):
            images[position] = value
            if consistent(position):
                extend(position + 1)

    extend(0)
    return found


def expected_endomorphisms(semilattice, monoid=None, style='combined'):
    """Known endomorphisms of :func:`free_structure`, named.

    ``ε_f`` (named ``f``) sends ``x`` to ``f(x)``, and the constant map is
    named after the constant."""
    if style == 'first':
        return [Operator([0], 'i')]
    if style == 'second':
        if semilattice.size == 1:
            return [Operator([0], 'i'), Operator([0], 'e')]
        return [Operator([0, 1], 'i'), Operator([1, 1], 'e')]
    if monoid is None:
        monoid = trivial_monoid(semilattice)
    if semilattice.size == 1:
        return [Operator([0], name) for name in monoid.names + ('w',)]
    size = len(monoid)
    maps = [Operator([monoid.compose(f, g) for g in range(size)] + [size],
                     operator.name)
            for f, operator in enumerate(monoid.elements)]
    maps.append(Operator([size] * (size + 1), 'w'))
    return maps


def named_endomorphisms(semilattice, monoid=None, style='combined',
                        structure=None):
    """Endomorphisms of the free structure, checked against
    :func:`expected_endomorphisms`.

    Raises
    ------
    EndomorphismError
        If the enumerated and expected sets differ; the witness is the
        images of the first map in only one of them.
    """
    if structure is None:
        structure = free_structure(semilattice, monoid, style)
    expected = expected_endomorphisms(semilattice, monoid, style)
    found = endomorphisms(structure)
    extra = [images for images in found if images not in expected]
    if extra:
        raise EndomorphismError("unexpected endomorphism", extra[0].images)
    missing = [images for images in expected if images not in found]
    if missing:
        raise EndomorphismError("missing endomorphism", missing[0].images)
    return expected
