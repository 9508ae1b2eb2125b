# -*- coding: utf-8 -*-
"""Validation and order utilities for finite join-semilattices with 0."""
import itertools

import numpy as np

from .exceptions import SemilatticeError, OperatorError
from .functions import mask_of
from .types.operator import Operator
from .types.semilattice import Semilattice, Ideal


def validate(size, join, zero=0, labels=None):
    """Validate a join table and return a :class:`~.Semilattice`.

    The zero is moved to index 0; the remaining elements keep their relative
    input order, which is recorded in :attr:`~.Semilattice.source_order`.

    Parameters
    ----------
    size : int
        Number of carrier elements.
    join : sequence
        Either a flat row-major sequence of ``size * size`` indices or a
        square nested sequence.
    zero : int
        Input index of the least element.
    labels : sequence of str, optional
        Input display names.

    Raises
    ------
    SemilatticeError
        Naming the first violated axiom with witness indices (input indices).
    """
    if size < 1:
        raise SemilatticeError("size must be positive")
    table = np.array(join, dtype=int)
    if table.size != size * size:
        raise SemilatticeError("join table has {} entries, expected {}".format(
            table.size, size * size))
    table = table.reshape(size, size)
    if labels is not None and len(labels) != size:
        raise SemilatticeError("expected {} labels".format(size))
    if not 0 <= zero < size:
        raise SemilatticeError("zero out of range", (zero,))
    if table.min() < 0 or table.max() >= size:
        a, b = np.argwhere((table < 0) | (table >= size))[0]
        raise SemilatticeError("entry out of range", (a, b))

    diagonal = table[np.arange(size), np.arange(size)]
    if not np.array_equal(diagonal, np.arange(size)):
        a = int(np.flatnonzero(diagonal != np.arange(size))[0])
        raise SemilatticeError("not idempotent", (a,))
    if not np.array_equal(table, table.T):
        a, b = np.argwhere(table != table.T)[0]
        raise SemilatticeError("not commutative", (a, b))
    # (a+b)+c versus a+(b+c) over all triples
    left = table[table[:, :, np.newaxis], np.arange(size)]
    right = table[np.arange(size)[:, np.newaxis, np.newaxis],
                  table[np.newaxis, :, :]]
    if not np.array_equal(left, right):
        a, b, c = np.argwhere(left != right)[0]
        raise SemilatticeError("not associative", (a, b, c))
    if not np.array_equal(table[zero], np.arange(size)):
        x = int(np.flatnonzero(table[zero] != np.arange(size))[0])
        raise SemilatticeError("wrong zero", (zero, x))

    source_order = (zero,) + tuple(i for i in range(size) if i != zero)
    inverse = np.argsort(source_order)
    normalised = inverse[table[np.ix_(source_order, source_order)]]
    if labels is None:
        labels = tuple(str(index) for index in range(size))
    return Semilattice(normalised,
                       tuple(labels[index] for index in source_order),
                       source_order)


def from_source(semilattice, images):
    """Translate operator images given in input indices to internal ones."""
    inverse = {source: index
               for index, source in enumerate(semilattice.source_order)}
    if len(images) != semilattice.size:
        raise OperatorError("expected {} images".format(semilattice.size))
    try:
        return tuple(inverse[images[source]]
                     for source in semilattice.source_order)
    except KeyError as err:
        raise OperatorError("image out of range", err.args) from None


def ideals(semilattice):
    """All ideals, sorted by membership bitmask.

    On a finite semilattice with 0 every ideal is principal, so these are the
    down-sets of the elements, deduplicated."""
    order = semilattice.order
    masks = {mask_of(np.flatnonzero(order[:, s]))
             for s in range(semilattice.size)}
    return [Ideal(mask) for mask in sorted(masks)]


def generator(semilattice, ideal):
    """Greatest element of an ideal."""
    return semilattice.join_all(ideal.members)


def principal_ideal(semilattice, element):
    return Ideal(mask_of(np.flatnonzero(semilattice.order[:, element])))


def check_operator(semilattice, operator):
    """Raise :class:`~.OperatorError` unless `operator` is a
    (+,0)-endomorphism of `semilattice`."""
    images = np.array(operator.images)
    if len(images) != semilattice.size:
        raise OperatorError("expected {} images".format(semilattice.size))
    if images.min() < 0 or images.max() >= semilattice.size:
        raise OperatorError("image out of range")
    if images[semilattice.zero] != semilattice.zero:
        raise OperatorError("does not fix zero", (semilattice.zero,))
    join = semilattice.join
    mismatch = images[join] != join[images[:, np.newaxis], images]
    if mismatch.any():
        x, y = np.argwhere(mismatch)[0]
        raise OperatorError("not join-preserving", (x, y))


def is_operator(semilattice, operator):
    try:
        check_operator(semilattice, operator)
    except OperatorError:
        return False
    return True


def operators(semilattice):
    """All (+,0)-endomorphisms, in lexicographic order of images.

    Images are chosen element by element with monotonicity pruning."""
    size = semilattice.size
    order = semilattice.order
    candidates = [range(size)] * size
    found = []
    images = [0] * size

    def extend(position):
        if position == size:
            operator = Operator(images)
            if is_operator(semilattice, operator):
                found.append(operator)
            return
        for image in candidates[position]:
            if all(order[images[x], image]
                   for x in range(position) if order[x, position]):
                images[position] = image
                extend(position + 1)

    extend(1)
    return found


def automorphisms(semilattice):
    """Bijective operators, identity first."""
    return [operator for operator in operators(semilattice)
            if len(set(operator.images)) == semilattice.size]


def antisymmetric(semilattice):
    order = semilattice.order
    return not (order & order.T & ~np.eye(semilattice.size, dtype=bool)).any()


def monotone(semilattice, operator):
    order = semilattice.order
    images = np.array(operator.images)
    return bool((~order | order[images[:, np.newaxis], images]).all())


def minimal_covers(semilattice):
    """Antichains of nonzero elements whose join no proper subset attains.

    Only antichains of at least two elements are returned, as pairs
    ``(antichain, join)``, in ascending order of size then elements."""
    order = semilattice.order
    covers = []
    elements = list(semilattice.nonzero())
    for size in range(2, len(elements) + 1):
        for subset in itertools.combinations(elements, size):
            if any(order[a, b] for a, b in itertools.permutations(subset, 2)):
                continue
            join = semilattice.join_all(subset)
            if any(semilattice.join_all(smaller) == join
                   for smaller in itertools.combinations(subset, size - 1)):
                continue
            covers.append((subset, join))
    return covers
