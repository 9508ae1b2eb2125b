# -*- coding: utf-8 -*-
import pytest

from ..exceptions import ClosureBoundError, OperatorError
from ..fixtures import omega_truncation
from ..monoid import monoid_closure, trivial_monoid
from ..types.operator import Operator


def test_trivial(chain3_instance):
    semilattice, _ = chain3_instance
    monoid = trivial_monoid(semilattice)
    assert monoid.is_trivial
    assert monoid.names == ('i',)
    assert all(value for _, value in monoid.flags.items())


def test_swap_group(s22_swap_instance):
    _, monoid = s22_swap_instance
    assert monoid.names == ('i', 's')
    assert monoid.composition.tolist() == [[0, 1], [1, 0]]
    assert monoid.flags.is_group
    assert monoid.reductive
    assert monoid.right_cancellative
    assert monoid.fixes_top


def test_collapse(collapse_instance):
    _, monoid = collapse_instance
    assert monoid.names == ('i', 'c')
    assert monoid.composition.tolist() == [[0, 1], [1, 1]]
    assert monoid.reductive
    assert not monoid.right_cancellative
    assert monoid.flags.witnesses['right_cancellative'] == ('i', 'c', 'c')
    assert not monoid.flags.is_group
    assert monoid.fixes_top


def test_omega_truncation():
    _, monoid = omega_truncation(4)
    assert monoid.names == ('i', 'p', 'p_p', 'p_p_p')
    assert monoid.by_name('p_p_p').images == (0, 0, 0, 0)
    assert monoid.reductive
    assert not monoid.right_cancellative
    assert not monoid.fixes_top
    assert monoid.flags.witnesses['fixes_top'] == ('p',)


def test_unnamed_generators(s22_instance):
    semilattice, _ = s22_instance
    monoid = monoid_closure([Operator((0, 2, 1, 3))], semilattice)
    assert monoid.names == ('i', 'f1')


def test_generator_not_operator(s22_instance):
    semilattice, _ = s22_instance
    with pytest.raises(OperatorError, match="generator not an operator"):
        monoid_closure([Operator((0, 1, 1, 3))], semilattice)


def test_closure_bound():
    semilattice, _ = omega_truncation(4)
    with pytest.raises(ClosureBoundError, match="closure bound exceeded"):
        monoid_closure([Operator((0, 0, 1, 2), 'p')], semilattice, bound=3)
