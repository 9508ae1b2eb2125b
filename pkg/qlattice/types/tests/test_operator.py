# -*- coding: utf-8 -*-
from ..operator import Operator


def test_operator():
    operator = Operator([0, 2, 1, 3], 's')
    assert operator.images == (0, 2, 1, 3)
    assert operator(1) == 2
    assert len(operator) == 4


def test_compose():
    shift = Operator((0, 0, 1, 2))
    twice = shift.compose(shift)
    assert twice.images == (0, 0, 0, 1)
    assert twice.name is None
    swap = Operator((0, 2, 1, 3))
    assert swap.compose(swap) == Operator.identity(4)


def test_equality_ignores_name():
    assert Operator((0, 1), 'i') == Operator((0, 1), 'f')
    assert hash(Operator((0, 1), 'i')) == hash(Operator((0, 1)))
    assert Operator.identity(3).name == 'i'
