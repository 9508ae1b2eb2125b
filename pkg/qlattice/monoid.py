# -*- coding: utf-8 -*-
"""Closure and property detection for monoids of operators."""
import numpy as np

from .exceptions import ClosureBoundError, OperatorError
from .semilattice import check_operator
from .types.operator import Operator, OperatorMonoid, MonoidFlags

#: Default maximum number of monoid elements
CLOSURE_BOUND = 10000


def monoid_closure(generators, semilattice, bound=CLOSURE_BOUND):
    """Smallest composition-closed set containing `generators` and identity.

    Elements are discovered breadth first by composing generators on the
    left; a new composite ``g ∘ e`` is named ``"<g>_<e>"``. The identity is
    named ``i`` and comes first.

    Raises
    ------
    OperatorError
        A generator is not a (+,0)-endomorphism ("generator not an operator").
    ClosureBoundError
        More than `bound` elements.
    """
    identity = Operator.identity(semilattice.size)
    named = []
    for number, operator in enumerate(generators):
        try:
            check_operator(semilattice, operator)
        except OperatorError as err:
            raise OperatorError(
                "generator not an operator: {}".format(err.reason),
                err.witness) from None
        name = operator.name or "f{}".format(number + 1)
        named.append(Operator(operator.images, name))

    elements = [identity]
    seen = {identity: 0}
    for operator in named:
        if operator not in seen:
            seen[operator] = len(elements)
            elements.append(operator)
    position = 1
    while position < len(elements):
        current = elements[position]
        for operator in named:
            composite = operator.compose(current)
            if composite not in seen:
                if len(elements) >= bound:
                    raise ClosureBoundError(
                        "closure bound exceeded ({})".format(bound))
                seen[composite] = len(elements)
                elements.append(
                    Operator(composite.images,
                             "{}_{}".format(operator.name, current.name)))
        position += 1
    if len(elements) > bound:
        raise ClosureBoundError("closure bound exceeded ({})".format(bound))

    composition = np.array(
        [[seen[f.compose(g)] for g in elements] for f in elements], dtype=int)
    monoid = OperatorMonoid(semilattice, elements, composition)
    return OperatorMonoid(semilattice, elements, composition,
                          monoid_properties(monoid))


def monoid_properties(monoid):
    """Exhaustively computed :class:`~.MonoidFlags` of `monoid`.

    Composition is ``(h∘g)(x) = h(g(x))`` throughout."""
    table = monoid.composition
    names = monoid.names
    size = len(monoid)
    witnesses = {}

    reductive = True
    for f in range(size):
        for g in range(f + 1, size):
            if not (f in table[:, g] or g in table[:, f]):
                reductive = False
                witnesses.setdefault('reductive', (names[f], names[g]))

    right_cancellative = True
    for f in range(size):
        column = table[:, f]
        if len(set(column.tolist())) < size:
            right_cancellative = False
            g, h = _first_duplicate(column)
            witnesses.setdefault('right_cancellative',
                                 (names[g], names[h], names[f]))

    is_group = True
    for f in range(size):
        if not ((table[f] == 0) & (table[:, f] == 0)).any():
            is_group = False
            witnesses.setdefault('is_group', (names[f],))

    top = monoid.semilattice.top
    fixes_top = True
    for operator in monoid.elements:
        if operator(top) != top:
            fixes_top = False
            witnesses.setdefault('fixes_top', (operator.name,))

    return MonoidFlags(reductive, right_cancellative, is_group, fixes_top,
                       witnesses)


def _first_duplicate(column):
    first = {}
    for index, value in enumerate(column.tolist()):
        if value in first:
            return first[value], index
        first[value] = index
    return None


def trivial_monoid(semilattice):
    return monoid_closure([], semilattice)
