# -*- coding: utf-8 -*-
"""All finite join-semilattices with 0 of a given size, up to isomorphism.

A finite join-semilattice with 0 is a lattice, so every one has a
natural labelling with 0 least and the top last; the candidate orders are
the transitive relations on the middle elements compatible with that
labelling."""
import functools
import itertools

import numpy as np

from ..base import Property
from ..functions import transitive_closure
from ..monoid import trivial_monoid
from ..types.semilattice import Semilattice
from .base import InstanceGenerator


def _orders(size):
    if size == 1:
        yield np.ones((1, 1), dtype=bool)
        return
    pairs = list(itertools.combinations(range(1, size - 1), 2))
    for count in range(len(pairs) + 1):
        for subset in itertools.combinations(pairs, count):
            leq = np.eye(size, dtype=bool)
            leq[0, :] = True
            leq[:, size - 1] = True
            for a, b in subset:
                leq[a, b] = True
            if np.array_equal(transitive_closure(leq), leq):
                yield leq


def _join_table(leq):
    """Join table of a bounded order, or `None` if a join is missing."""
    size = len(leq)
    join = np.zeros((size, size), dtype=int)
    for a, b in itertools.combinations_with_replacement(range(size), 2):
        upper = np.flatnonzero(leq[a] & leq[b])
        least = [c for c in upper if leq[c, upper].all()]
        if not least:
            return None
        join[a, b] = join[b, a] = least[0]
    return join


def _canonical(join):
    """Relabelling of `join` with the least flattened table, fixing 0 and
    the top."""
    size = len(join)
    best = None
    for middle in itertools.permutations(range(1, size - 1)):
        relabel = np.array((0,) + middle + (size - 1,)) if size > 1 \
            else np.zeros(1, dtype=int)
        table = np.empty_like(join)
        table[np.ix_(relabel, relabel)] = relabel[join]
        key = tuple(table.flatten())
        if best is None or key < best[0]:
            best = key, table
    return best[1]


@functools.lru_cache(maxsize=None)
def _semilattices(size):
    found = {}
    for leq in _orders(size):
        join = _join_table(leq)
        if join is None:
            continue
        table = _canonical(join)
        found.setdefault(tuple(table.flatten()), table)
    return tuple(Semilattice(found[key]) for key in sorted(found))


def semilattices(max_size, min_size=1):
    """Join-semilattices with 0 on ``min_size..max_size`` elements, one per
    isomorphism class, by size then canonical table."""
    return [semilattice for size in range(min_size, max_size + 1)
            for semilattice in _semilattices(size)]


class ExhaustiveGenerator(InstanceGenerator):
    """Every semilattice up to a size, each with the trivial monoid."""

    max_size = Property(int, default=5, doc="Largest carrier size")
    min_size = Property(int, default=1, doc="Smallest carrier size")

    def instances(self):
        for semilattice in semilattices(self.max_size, self.min_size):
            yield semilattice, trivial_monoid(semilattice)
