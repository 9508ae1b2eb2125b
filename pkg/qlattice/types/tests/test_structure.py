# -*- coding: utf-8 -*-
from ..structure import (
    CompactConSemilattice, FiniteStructure, StructureCongruence)


def _structure():
    return FiniteStructure(
        3, {'f': [1, 1, 2]}, {'w': 2}, {'A': {2}, 'B': [1, 2]},
        ['x', 'f(x)', 'w'])


def test_structure():
    structure = _structure()
    assert structure.operations['f'] == (1, 1, 2)
    assert structure.predicates['B'] == frozenset({1, 2})
    assert structure.atoms() == frozenset(
        {('A', 2), ('B', 1), ('B', 2)})
    assert FiniteStructure(2).labels == ('0', '1')


def test_quotient():
    structure = _structure()
    congruence = StructureCongruence(
        (0, 1, 1), structure.atoms() | {('A', 1)})
    quotient = structure.quotient(congruence)
    assert quotient.size == 2
    assert quotient.labels == ('x', 'f(x)/w')
    assert quotient.operations['f'] == (1, 1)
    assert quotient.constants['w'] == 1
    assert quotient.predicates['A'] == frozenset({1})


def test_congruence_order_and_label():
    structure = _structure()
    base = StructureCongruence((0, 1, 2), structure.atoms())
    larger = StructureCongruence((0, 1, 1), structure.atoms() | {('A', 1)})
    assert base <= larger
    assert not larger <= base
    assert base.sort_key() < larger.sort_key()
    assert larger.pairs() == [(2, 1)]
    assert base.label(structure) == "<x|f(x)|w;>"
    assert larger.label(structure) == "<x|f(x),w;A(f(x))>"


def test_compact_con_semilattice():
    structure = _structure()
    base = StructureCongruence((0, 1, 2), structure.atoms())
    top = StructureCongruence((0, 0, 0), {
        (name, x) for name in 'AB' for x in range(3)})
    semilattice = CompactConSemilattice(
        structure, [], [base, top], [[0, 1], [1, 1]])
    assert len(semilattice) == 2
    assert semilattice.index(top) == 1
    assert semilattice.as_semilattice().top == 1
    assert semilattice.operators == {}
