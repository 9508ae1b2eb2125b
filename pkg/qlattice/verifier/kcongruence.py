# -*- coding: utf-8 -*-
"""Congruences of finite structures relative to a set of quasi-identities.

A K-congruence is a pair of a compatible equivalence and a predicate
extension, containing the structure's own facts and saturated by the
equivalence, whose quotient satisfies the governing laws. Laws are Horn
clauses, so the least K-congruence containing a set of pairs and facts is
found by forward chaining over their ground instances.
"""
import itertools
import warnings

import numpy as np

from ..congruence.partition import join_closure
from ..exceptions import OperatorError, VerificationError
from ..functions import UnionFind, partition_blocks, set_partitions
from ..semilattice import check_operator
from ..types.operator import Operator
from ..types.presentation import Equation
from ..types.structure import StructureCongruence, CompactConSemilattice
from .model import assignments, evaluate, violated_law

#: Largest candidate space scanned by the exhaustive strategy
ORACLE_BOUND = 4096


def _laws(laws):
    return tuple(getattr(laws, 'laws', laws))


def _ground(atom, assignment, structure):
    if isinstance(atom, Equation):
        return ('=',
                evaluate(atom.left, assignment, structure.operations,
                         structure.constants),
                evaluate(atom.right, assignment, structure.operations,
                         structure.constants))
    return (atom.predicate,
            evaluate(atom.term, assignment, structure.operations,
                     structure.constants))


def ground_instances(structure, laws):
    """Distinct ground instances ``(premises, conclusion)`` of `laws`.

    Ground atoms are ``('=', a, b)`` or ``(predicate, a)``. Instances whose
    conclusion is a trivial equation are dropped."""
    instances = set()
    for law in _laws(laws):
        for assignment in assignments(law, structure.size):
            conclusion = _ground(law.conclusion, assignment, structure)
            if conclusion[0] == '=' and conclusion[1] == conclusion[2]:
                continue
            premises = frozenset(_ground(atom, assignment, structure)
                                 for atom in law.premises)
            instances.add((premises, conclusion))
    return sorted(instances, key=lambda item: (sorted(item[0]), item[1]))


class _Closure:
    """Least K-congruence containing given pairs and facts."""

    def __init__(self, structure, laws):
        self.structure = structure
        self.base = structure.atoms()
        self.instances = ground_instances(structure, laws)

    def __call__(self, pairs=(), facts=()):
        structure = self.structure
        classes = UnionFind(structure.size)
        for x, y in pairs:
            classes.union(x, y)
        marked = {(predicate, classes.find(x))
                  for predicate, x in itertools.chain(self.base, facts)}

        def holds(atom):
            if atom[0] == '=':
                return classes.find(atom[1]) == classes.find(atom[2])
            return (atom[0], classes.find(atom[1])) in marked

        changed = True
        while changed:
            changed = False
            for table in structure.operations.values():
                for x in range(structure.size):
                    if classes.union(table[x], table[classes.find(x)]):
                        changed = True
            marked = {(predicate, classes.find(x))
                      for predicate, x in marked}
            for premises, conclusion in self.instances:
                if holds(conclusion) \
                        or not all(holds(atom) for atom in premises):
                    continue
                changed = True
                if conclusion[0] == '=':
                    classes.union(conclusion[1], conclusion[2])
                else:
                    marked.add((conclusion[0], classes.find(conclusion[1])))
        partition = classes.partition()
        return StructureCongruence(
            partition,
            {(predicate, x) for predicate, rep in marked
             for x in range(structure.size) if partition[x] == rep})

    def generators(self, congruence):
        """Pairs and facts generating `congruence`, beyond the base."""
        return congruence.pairs(), congruence.theta1 - self.base

    def join(self, first, second):
        pairs, facts = self.generators(first)
        more_pairs, more_facts = self.generators(second)
        return self(pairs + more_pairs, facts | more_facts)


def k_closure(structure, laws, pairs=(), facts=()):
    """Least K-congruence of `structure` containing `pairs` and `facts`.

    Parameters
    ----------
    laws : Presentation or iterable of QuasiIdentity
    pairs : iterable of tuple
        Element pairs to identify.
    facts : iterable of tuple
        ``(predicate, element)`` facts to add.
    """
    return _Closure(structure, laws)(pairs, facts)


def is_k_congruence(structure, laws, congruence):
    """Whether `congruence` is compatible, saturated, contains the
    structure's facts and has a quotient satisfying `laws`."""
    partition = congruence.theta0
    for table in structure.operations.values():
        if any(partition[table[x]] != partition[table[rep]]
               for x, rep in enumerate(partition)):
            return False
    if not structure.atoms() <= congruence.theta1:
        return False
    if any((predicate, partition[x]) not in congruence.theta1
           for predicate, x in congruence.theta1):
        return False
    if any((predicate, x) not in congruence.theta1
           for predicate, rep in congruence.theta1
           for x in range(structure.size) if partition[x] == rep):
        return False
    return violated_law(structure.quotient(congruence), _laws(laws)) is None


def _exhaustive(structure, laws, bound):
    base = structure.atoms()
    candidates = []
    for partition in set_partitions(structure.size):
        if any(partition[table[x]] != partition[table[rep]]
               for table in structure.operations.values()
               for x, rep in enumerate(partition)):
            continue
        blocks = partition_blocks(partition)
        forced, free = set(), []
        for predicate in structure.predicates:
            for block in blocks:
                cell = {(predicate, x) for x in block}
                if cell & base:
                    forced |= cell
                else:
                    free.append(cell)
        candidates.append((partition, forced, free))
    total = sum(2 ** len(free) for _, _, free in candidates)
    if total > bound:
        warnings.warn("exhaustive congruence scan skipped: {} candidates "
                      "exceed bound {}".format(total, bound), UserWarning)
        return None
    found = []
    for partition, forced, free in candidates:
        for flags in itertools.product((False, True), repeat=len(free)):
            theta1 = set(forced).union(
                *itertools.compress(free, flags))
            congruence = StructureCongruence(partition, theta1)
            if violated_law(structure.quotient(congruence),
                            _laws(laws)) is None:
                found.append(congruence)
    return found


def _least_upper_bound(elements, first, second):
    above = [element for element in elements
             if first <= element and second <= element]
    least = [element for element in above
             if all(element <= other for other in above)]
    if len(least) != 1:
        raise VerificationError("K-congruences not join-closed")
    return least[0]


def k_congruences(structure, laws, strategy='closure', bound=ORACLE_BOUND):
    """Join-semilattice of all K-congruences of `structure`.

    Parameters
    ----------
    strategy : str
        ``'closure'`` takes the join-closure of the principal K-congruences;
        ``'exhaustive'`` filters every compatible equivalence and saturated
        extension by quotient satisfaction.
    bound : int
        Largest candidate space for ``'exhaustive'``; above it a
        :class:`UserWarning` is issued and `None` returned.
    """
    laws = _laws(laws)
    if strategy == 'closure':
        closure = _Closure(structure, laws)
        zero = closure()
        principals = {closure([(x, y)]) for x, y in itertools.combinations(
            range(structure.size), 2)}
        principals |= {closure(facts=[(predicate, x)])
                       for predicate in structure.predicates
                       for x in range(structure.size)}
        elements = join_closure({zero} | principals, closure.join)
        elements = sorted(elements, key=StructureCongruence.sort_key)
        index = {element: position for position, element in
                 enumerate(elements)}

        def join(first, second):
            return index[closure.join(first, second)]
    elif strategy == 'exhaustive':
        elements = _exhaustive(structure, laws, bound)
        if elements is None:
            return None
        elements = sorted(elements, key=StructureCongruence.sort_key)
        index = {element: position for position, element in
                 enumerate(elements)}

        def join(first, second):
            return index[_least_upper_bound(elements, first, second)]
    else:
        raise ValueError("unknown strategy {!r}".format(strategy))
    table = np.array([[join(first, second) for second in elements]
                      for first in elements], dtype=int)
    return CompactConSemilattice(structure, laws, elements, table)


def induced_operator(endomorphism, semilattice, name=None):
    """Operator ``ε̂`` induced on `semilattice` by a structure endomorphism.

    Each congruence is mapped through its canonical generators (pairs with
    their block representative, facts beyond the base) and, as a
    well-definedness check, through all of its pairs and facts.

    Parameters
    ----------
    endomorphism : Operator
        Images of the carrier elements.
    semilattice : CompactConSemilattice

    Raises
    ------
    VerificationError
        If the two generating sets disagree, an image is not a listed
        K-congruence, or the result is not a (+,0)-endomorphism.
    """
    structure = semilattice.structure
    closure = _Closure(structure, semilattice.laws)
    index = {element: position
             for position, element in enumerate(semilattice.elements)}
    images = []
    for congruence in semilattice.elements:
        pairs, facts = closure.generators(congruence)
        image = closure(
            [(endomorphism(x), endomorphism(y)) for x, y in pairs],
            [(predicate, endomorphism(x)) for predicate, x in facts])
        blocks = partition_blocks(congruence.theta0)
        check = closure(
            [(endomorphism(x), endomorphism(y)) for block in blocks
             for x, y in itertools.combinations(block, 2)],
            [(predicate, endomorphism(x))
             for predicate, x in congruence.theta1])
        if image != check:
            raise VerificationError("induced operator not well defined",
                                    (congruence.label(structure),))
        if image not in index:
            raise VerificationError("image not a K-congruence",
                                    (image.label(structure),))
        images.append(index[image])
    operator = Operator(images, name or endomorphism.name)
    try:
        check_operator(semilattice.as_semilattice(), operator)
    except OperatorError as err:
        raise VerificationError(
            "induced operator {}".format(err.reason), err.witness) from None
    return operator


def principal(semilattice, pairs=(), facts=()):
    """Index of the least K-congruence of `semilattice` containing
    `pairs` and `facts`."""
    closure = _Closure(semilattice.structure, semilattice.laws)
    return semilattice.index(closure(pairs, facts))


def upsilon(structure, laws):
    """Least K-congruence whose equivalence is universal.

    Raises
    ------
    VerificationError
        If the one-element quotient violates a law.
    """
    congruence = k_closure(structure, laws,
                           [(0, x) for x in range(1, structure.size)])
    law = violated_law(structure.quotient(congruence), _laws(laws))
    if law is not None:
        raise VerificationError(
            "one-element quotient violates law {}".format(law))
    return congruence
