# -*- coding: utf-8 -*-
"""Eon relations: reflexive, transitive, compatible relations contained in
the order and closed under intervals.

For a semilattice with operators, intersecting a congruence with the order
gives an eon relation and this is a lattice isomorphism; the inverse sends
``R`` to ``{(x, y) : x R x+y and y R x+y}``.
"""
import itertools

import networkx as nx
import numpy as np

from ..exceptions import (
    ExhaustiveBoundError, IsomorphismError, MonoidPropertyError, OrderError,
    VerificationError)
from ..functions import canonical_partition, transitive_closure
from ..semilattice import ideals
from ..types.lattice import FiniteLattice
from ..types.relation import EonRelation, Congruence
from ..types.report import Check, Report
from .partition import unary_maps, join_closure

#: Largest carrier scanned exhaustively by default
EXHAUSTIVE_BOUND = 6


def eon_closure(semilattice, monoid, pairs):
    """Least eon relation containing `pairs` (each with ``x <= y``).

    Iterates, to a fixpoint, the passes: operations (translations and
    operators), transitivity, interval condition."""
    size = semilattice.size
    order = semilattice.order
    relation = np.eye(size, dtype=bool)
    for x, y in pairs:
        relation[x, y] = True
    maps = unary_maps(semilattice, monoid)
    while True:
        previous = relation.copy()
        xs, ys = np.nonzero(relation)
        for images in maps:
            relation[images[xs], images[ys]] = True
        relation = transitive_closure(relation)
        for x, z in zip(*np.nonzero(relation)):
            relation[x] |= order[x] & order[:, z]
        if np.array_equal(relation, previous):
            return EonRelation.from_matrix(relation)


def principal_eon(semilattice, monoid, a, b):
    """``<a, b>``: least eon relation containing ``(a, b)``.

    Raises
    ------
    OrderError
        If ``a`` is not below ``b``.
    """
    if not semilattice.leq(a, b):
        raise OrderError("a ≰ b", (a, b))
    return eon_closure(semilattice, monoid, [(a, b)])


def is_eon_relation(semilattice, monoid, matrix):
    """Check the defining conditions of an eon relation on a matrix."""
    order = semilattice.order
    if not matrix.diagonal().all() or (matrix & ~order).any():
        return False
    if not np.array_equal(transitive_closure(matrix), matrix):
        return False
    for x, z in zip(*np.nonzero(matrix)):
        if (order[x] & order[:, z] & ~matrix[x]).any():
            return False
    xs, ys = np.nonzero(matrix)
    return all(matrix[images[xs], images[ys]].all()
               for images in unary_maps(semilattice, monoid))


def all_eon_relations(semilattice, monoid=None, bound=EXHAUSTIVE_BOUND):
    """Every eon relation, by scanning subsets of the strict order.

    Raises
    ------
    ExhaustiveBoundError
        If the carrier has more than `bound` elements.
    """
    size = semilattice.size
    if size > bound:
        raise ExhaustiveBoundError("carrier too large for exhaustive mode")
    order = semilattice.order
    strict = [(x, y) for x, y in zip(*np.nonzero(order)) if x != y]
    relations = []
    for count in range(len(strict) + 1):
        for subset in itertools.combinations(strict, count):
            matrix = np.eye(size, dtype=bool)
            for x, y in subset:
                matrix[x, y] = True
            if is_eon_relation(semilattice, monoid, matrix):
                relations.append(EonRelation.from_matrix(matrix))
    return sorted(relations, key=EonRelation.sort_key)


def eon_lattice(semilattice, monoid=None, mode='auto',
                bound=EXHAUSTIVE_BOUND):
    """Lattice of eon relations ordered by inclusion.

    Parameters
    ----------
    mode : str
        ``'exhaustive'`` scans the relation space, ``'closure'`` takes the
        join-closure of principal eon relations, ``'auto'`` scans when the
        carrier has at most `bound` elements.
    """
    if mode not in ('auto', 'exhaustive', 'closure'):
        raise ValueError("unknown eon mode {!r}".format(mode))
    if mode == 'exhaustive' or (
            mode == 'auto' and semilattice.size <= bound):
        relations = all_eon_relations(semilattice, monoid, bound)
    else:
        order = semilattice.order
        principals = {
            principal_eon(semilattice, monoid, int(a), int(b))
            for a, b in zip(*np.nonzero(order)) if a != b}
        identity = EonRelation.from_matrix(
            np.eye(semilattice.size, dtype=bool))
        relations = sorted(
            join_closure(
                {identity} | principals,
                lambda first, second: eon_closure(
                    semilattice, monoid,
                    first.strict_pairs() + second.strict_pairs())),
            key=EonRelation.sort_key)
    return FiniteLattice.from_order(
        relations, lambda x, y: x <= y,
        [relation.label(semilattice.labels) for relation in relations])


def eon_of_congruence(semilattice, congruence):
    """``θ ∩ ≤``."""
    reps = np.array(congruence.partition)
    return EonRelation.from_matrix(
        semilattice.order & (reps[:, np.newaxis] == reps[np.newaxis, :]))


def congruence_of_eon(semilattice, relation):
    """Candidate inverse ``{(x, y) : x R x+y and y R x+y}``."""
    size = semilattice.size
    matrix = relation.matrix
    join = semilattice.join
    related = matrix[np.arange(size)[:, np.newaxis], join] \
        & matrix[np.arange(size)[np.newaxis, :], join]
    labels = [int(np.flatnonzero(row)[0]) for row in related]
    return Congruence(canonical_partition(labels))


def con_eon_isomorphism(semilattice, monoid, congruences, eons):
    """Verify ``θ ↦ θ ∩ ≤`` is an order-isomorphism between the lattices.

    Parameters
    ----------
    congruences, eons : FiniteLattice
        Outputs of :func:`~.congruence_lattice` and :func:`eon_lattice`.

    Returns
    -------
    : list of tuple
        ``(congruence, eon relation)`` pairs in congruence order.

    Raises
    ------
    IsomorphismError
        With the offending element labels; this signals a bug.
    """
    labels = semilattice.labels
    if congruences.size != eons.size:
        raise IsomorphismError(
            "isomorphism failure: sizes differ",
            (congruences.size, eons.size))
    pairing = []
    targets = set(eons.elements)
    for congruence in congruences.elements:
        relation = eon_of_congruence(semilattice, congruence)
        if relation not in targets:
            raise IsomorphismError("isomorphism failure: image not an eon "
                                   "relation", (congruence.label(labels),))
        if congruence_of_eon(semilattice, relation) != congruence:
            raise IsomorphismError("isomorphism failure: inverse mismatch",
                                   (relation.label(labels),))
        pairing.append((congruence, relation))
    if len({relation for _, relation in pairing}) != len(pairing):
        raise IsomorphismError("isomorphism failure: not injective")
    for (first, first_eon), (second, second_eon) in itertools.product(
            pairing, repeat=2):
        if (first <= second) != (first_eon <= second_eon):
            raise IsomorphismError(
                "isomorphism failure: order not preserved",
                (first.label(labels), second.label(labels)))
    return pairing


def equational_elements(semilattice, monoid=None):
    """Equational eon relations ``⋁_{b ∈ I} <0, b>``, one per ideal.

    Returns
    -------
    : list of tuple
        ``(ideal, eon relation)`` pairs in ideal order.

    Raises
    ------
    VerificationError
        If the set misses the least or greatest eon relation or is not
        closed under joins.
    """
    size = semilattice.size
    chart = [(ideal, eon_closure(semilattice, monoid,
                                 [(0, b) for b in ideal.members]))
             for ideal in ideals(semilattice)]
    relations = {relation for _, relation in chart}
    identity = EonRelation.from_matrix(np.eye(size, dtype=bool))
    universal = EonRelation.from_matrix(semilattice.order)
    if identity not in relations or universal not in relations:
        raise VerificationError("equational elements miss an extreme")
    for first, second in itertools.combinations(relations, 2):
        joined = eon_closure(semilattice, monoid,
                             first.strict_pairs() + second.strict_pairs())
        if joined not in relations:
            raise VerificationError("equational elements not join-closed",
                                    (first.label(), second.label()))
    return chart


def eon_membership(semilattice, a, b, c, d):
    """Whether ``<a, b> <= <c, d>`` in the operator-free setting.

    True iff ``a = b``, or ``a >= c`` and ``a + d >= b``."""
    if a == b:
        return True
    return semilattice.leq(c, a) and semilattice.leq(b, semilattice.join[a, d])


def step_graph(semilattice, family):
    """Digraph with an edge e → f when e < f and <e, f> is below some
    <c_j, d_j> of `family`."""
    size = semilattice.size
    steps = nx.DiGraph()
    steps.add_nodes_from(range(size))
    steps.add_edges_from(
        (e, f) for e in range(size) for f in range(size)
        if e != f and semilattice.leq(e, f)
        and any(eon_membership(semilattice, e, f, c, d) for c, d in family))
    return steps


def eon_join_membership(semilattice, a, b, family, steps=None):
    """Whether ``<a, b> <= ⋁_j <c_j, d_j>`` in the operator-free setting.

    True iff ``a = b`` or there is a chain ``e_1 < f_1 = e_2 < ... < f_k``
    with ``e_1 <= a``, ``a + f_k >= b`` and each step ``<e_i, f_i>`` below
    some ``<c_j, d_j>``."""
    if a == b:
        return True
    if steps is None:
        steps = step_graph(semilattice, family)
    for start in range(semilattice.size):
        if not semilattice.leq(start, a):
            continue
        if any(semilattice.leq(b, semilattice.join[a, end])
               for end in nx.descendants(steps, start)):
            return True
    return False


def eon_rule_check(semilattice, monoid=None, family_size=2):
    """Compare the ordering and join rules with brute-force containment.

    Every pair ``(a, b)`` with ``a <= b`` is tested against every principal
    eon relation, and against the joins of every family of up to
    `family_size` principal eon relations.

    Raises
    ------
    MonoidPropertyError
        If `monoid` is not trivial.
    """
    if monoid is not None and not monoid.is_trivial:
        raise MonoidPropertyError("trivial", "non-trivial monoid supplied")
    size = semilattice.size
    labels = semilattice.labels
    pairs = [(a, b) for a in range(size) for b in range(size)
             if semilattice.leq(a, b)]
    principals = {(c, d): principal_eon(semilattice, None, c, d)
                  for c, d in pairs}

    ordering = Check("ordering_rule", True)
    for (a, b), (c, d) in itertools.product(pairs, repeat=2):
        if eon_membership(semilattice, a, b, c, d) \
                != principals[c, d].related(a, b):
            ordering = Check("ordering_rule", False, "{}<{} vs {}<{}".format(
                labels[a], labels[b], labels[c], labels[d]))
            break

    joining = Check("join_rule", True)
    strict = [pair for pair in pairs if pair[0] != pair[1]]
    families = itertools.chain.from_iterable(
        itertools.combinations(strict, count)
        for count in range(1, family_size + 1))
    for family in families:
        joined = eon_closure(semilattice, None, list(family))
        steps = step_graph(semilattice, family)
        failure = next(
            ((a, b) for a, b in pairs
             if eon_join_membership(semilattice, a, b, family, steps)
             != joined.related(a, b)), None)
        if failure is not None:
            joining = Check("join_rule", False, "{}<{} in {}".format(
                labels[failure[0]], labels[failure[1]],
                ",".join("{}<{}".format(labels[c], labels[d])
                         for c, d in family)))
            break

    return Report("eon rules", [ordering, joining],
                  {'pairs': len(pairs), 'family_size': family_size})
