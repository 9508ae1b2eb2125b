# -*- coding: utf-8 -*-
import pytest

from ...exceptions import EndomorphismError
from ...types.structure import FiniteStructure
from ..free import (
    endomorphisms, expected_endomorphisms, free_structure, is_endomorphism,
    named_endomorphisms)


def test_free_first_second(chain3_instance):
    semilattice, _ = chain3_instance
    first = free_structure(semilattice, style='first')
    assert first.size == 1
    assert first.predicates == {'P_1': frozenset(), 'U': frozenset()}
    second = free_structure(semilattice, style='second')
    assert second.labels == ('x', 'e')
    assert second.constants == {'e': 1}
    assert second.predicates['U'] == {1}
    with pytest.raises(ValueError, match="unknown presentation style"):
        free_structure(semilattice, style='third')


def test_free_combined(s22_swap_instance):
    structure = free_structure(*s22_swap_instance)
    assert structure.labels == ('x', 's(x)', 'w')
    assert structure.operations == {'i': (0, 1, 2), 's': (1, 0, 2)}
    assert structure.constants == {'w': 2}
    assert all(extension == {2}
               for extension in structure.predicates.values())


def test_free_combined_kernel(chain3_instance):
    structure = free_structure(*chain3_instance)
    assert structure.size == 2
    assert structure.predicates == {'P_1': {1}, 'U': {1}}


def test_endomorphisms(s22_swap_instance):
    structure = free_structure(*s22_swap_instance)
    found = endomorphisms(structure)
    assert [endomorphism.images for endomorphism in found] \
        == [(0, 1, 2), (1, 0, 2), (2, 2, 2)]
    assert all(is_endomorphism(structure, endomorphism.images)
               for endomorphism in found)
    assert not is_endomorphism(structure, (0, 0, 2))

    named = named_endomorphisms(*s22_swap_instance)
    assert [endomorphism.name for endomorphism in named] == ['i', 's', 'w']


def test_second_endomorphisms(s22_instance):
    semilattice, _ = s22_instance
    named = named_endomorphisms(semilattice, style='second')
    assert [endomorphism.images for endomorphism in named] \
        == [(0, 1), (1, 1)]


def test_unexpected_endomorphism(s22_swap_instance):
    # without operations x and s(x) map independently
    free = free_structure(*s22_swap_instance)
    structure = FiniteStructure(free.size, constants=free.constants,
                                predicates=free.predicates,
                                labels=free.labels)
    assert len(expected_endomorphisms(*s22_swap_instance)) == 3
    with pytest.raises(EndomorphismError, match="unexpected endomorphism"):
        named_endomorphisms(*s22_swap_instance, structure=structure)


def test_free_one_element(trivial_instance):
    # x = e and x = w identify the generator with the constant
    semilattice, monoid = trivial_instance
    second = free_structure(semilattice, style='second')
    assert second.size == 1
    assert second.constants == {'e': 0}
    assert second.predicates == {}
    combined = free_structure(semilattice, monoid)
    assert combined.size == 1
    assert combined.labels == ('w',)
    assert combined.operations == {'i': (0,)}
    assert combined.constants == {'w': 0}

    named = named_endomorphisms(semilattice, monoid)
    assert [endomorphism.name for endomorphism in named] == ['i', 'w']
    assert [endomorphism.name for endomorphism in named_endomorphisms(
        semilattice, style='second')] == ['i', 'e']
