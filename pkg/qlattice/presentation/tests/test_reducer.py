# -*- coding: utf-8 -*-
import pytest

from ...exceptions import ReductionError
from ...fixtures import load_fixture
from ...types.presentation import Equation, Predication, QuasiIdentity, Term
from ..emitter import present_combined, present_first, present_second
from ..reducer import normalise, reduce_to_one_variable
from ..text import parse_law


@pytest.fixture(scope='module')
def context():
    return present_combined(*load_fixture('s22-swap'))


@pytest.mark.parametrize('text, expected', [
    ("s(x) = y -> s(y) = x", []),
    ("P_1(x) & x = s(y) -> P_2(y)", ["P_1(s(y)) -> P_2(y)"]),
    ("P_1(x) & P_2(y) & x = y -> U(x)", ["P_1(x) & P_2(x) -> U(x)"]),
    ("x = y & U(x) -> U(s(y))", ["U(x) -> U(s(x))"]),
    ("P_1(y) & U(x) -> U(s(x))", ["U(x) -> U(s(x))"]),
    ("s(s(x)) = x", []),
    ("U(x) -> P_1(x)", ["U(x) -> P_1(x)"]),
])
def test_reduce(context, text, expected):
    law = parse_law(text, context)
    reduced = reduce_to_one_variable(law, context)
    assert [str(result) for result in reduced] == expected
    assert all(len(result.variables) <= 1 for result in reduced)


def test_reduce_second_alias():
    context = present_second(load_fixture('chain3')[0])
    law = parse_law("E(x) & x = y -> P_1(y)", context)
    assert [str(result) for result in reduce_to_one_variable(law, context)] \
        == ["U(x) -> P_1(x)"]


def test_reduce_errors(context):
    law = QuasiIdentity([Predication('Q', Term('x'))],
                        Predication('U', Term('x')))
    with pytest.raises(ReductionError, match="undeclared symbol Q"):
        reduce_to_one_variable(law, context)

    first = present_first(load_fixture('chain3')[0])
    with pytest.raises(ReductionError,
                       match="not reducible: first presentation"):
        reduce_to_one_variable(parse_law("x = y", first), first)


def test_normalise(context):
    assert normalise(QuasiIdentity([], Equation(
        Term('x', ('s', 's')), Term('x'))), context) is None
    law = normalise(QuasiIdentity(
        [Equation(Term('x', ('s',)), Term('y', ('s',)))],
        Equation(Term('x'), Term('y'))), context)
    assert law is None
    law = normalise(QuasiIdentity(
        [Predication('U', Term('x', ('i',)))],
        Predication('P_1', Term('x'))), context)
    assert str(law) == "U(x) -> P_1(x)"
