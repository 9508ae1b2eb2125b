# -*- coding: utf-8 -*-
"""Congruences of a semilattice with a monoid of operators."""
from collections import deque

import numpy as np

from ..functions import (
    UnionFind, components_partition, set_partitions)
from ..types.lattice import FiniteLattice
from ..types.relation import Congruence


def unary_maps(semilattice, monoid=None):
    """Translations ``x ↦ x + s`` and the non-identity operators of `monoid`.

    Compatibility with these maps is compatibility with join and with every
    operator."""
    maps = [semilattice.join[s] for s in semilattice.nonzero()]
    if monoid is not None:
        maps.extend(np.array(operator.images)
                    for operator in monoid.elements[1:])
    return maps


def congruence_closure(semilattice, monoid, pairs):
    """Least congruence containing `pairs`.

    Pairs are pushed through every unary map until no new pair appears, then
    merged; the union-find keeps least representatives."""
    maps = unary_maps(semilattice, monoid)
    classes = UnionFind(semilattice.size)
    queue = deque()
    seen = set()
    for x, y in pairs:
        if x != y:
            pair = (min(x, y), max(x, y))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    while queue:
        x, y = queue.popleft()
        classes.union(x, y)
        for images in maps:
            u, v = int(images[x]), int(images[y])
            if u != v:
                pair = (min(u, v), max(u, v))
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
    return Congruence(classes.partition())


def principal_congruence(semilattice, monoid, a, b):
    """``con(a, b)``: least congruence relating `a` and `b`."""
    return congruence_closure(semilattice, monoid, [(a, b)])


def join_congruences(semilattice, monoid, first, second):
    """Join of two congruences.

    The transitive closure of the union (connected components of the pair
    graph) is re-closed under compatibility."""
    size = semilattice.size
    pairs = [(x, rep) for congruence in (first, second)
             for x, rep in enumerate(congruence.partition) if x != rep]
    union = components_partition(size, pairs)
    return congruence_closure(
        semilattice, monoid,
        [(x, rep) for x, rep in enumerate(union) if x != rep])


def is_compatible(semilattice, monoid, partition):
    reps = np.array(partition)
    return all(
        np.array_equal(reps[images[reps]], reps[images])
        for images in unary_maps(semilattice, monoid))


def all_congruences(semilattice, monoid=None):
    """Every compatible partition, by scanning all set partitions."""
    return sorted(
        (Congruence(partition)
         for partition in set_partitions(semilattice.size)
         if is_compatible(semilattice, monoid, partition)),
        key=Congruence.sort_key)


def congruence_lattice(semilattice, monoid=None):
    """Lattice of congruences ordered by refinement.

    Elements are the identity and the join-closure of the principal
    congruences, sorted identity first."""
    size = semilattice.size
    principals = {principal_congruence(semilattice, monoid, a, b)
                  for a in range(size) for b in range(a + 1, size)}
    congruences = join_closure(
        {Congruence.identity(size)} | principals,
        lambda first, second: join_congruences(
            semilattice, monoid, first, second))
    congruences = sorted(congruences, key=Congruence.sort_key)
    return FiniteLattice.from_order(
        congruences, lambda x, y: x <= y,
        [congruence.label(semilattice.labels) for congruence in congruences])


def join_closure(elements, join):
    """Close a set of elements under a binary join."""
    closed = set(elements)
    frontier = list(closed)
    while frontier:
        added = []
        for first in frontier:
            for second in list(closed):
                joined = join(first, second)
                if joined not in closed:
                    closed.add(joined)
                    added.append(joined)
        frontier = added
    return closed
