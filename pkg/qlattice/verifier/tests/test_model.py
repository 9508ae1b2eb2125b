# -*- coding: utf-8 -*-
import pytest

from ...exceptions import UninterpretedSymbolError
from ...fixtures import load_fixture
from ...presentation.emitter import present_first, present_second
from ...presentation.text import parse_law
from ...types.presentation import Term
from ...types.structure import FiniteStructure
from ..model import enumerate_models, evaluate, satisfies, violated_law


@pytest.fixture
def structure():
    return FiniteStructure(
        2, {'s': (1, 0), 'f': (0, 0)}, {'w': 0}, {'U': {0}})


def test_evaluate(structure):
    operations, constants = structure.operations, structure.constants
    assert evaluate(Term('x', ('s',)), {'x': 0}, operations, constants) == 1
    # f(s(x)): s first
    assert evaluate(Term('x', ('f', 's')), {'x': 1}, operations,
                    constants) == 0
    assert evaluate(Term('w', ('s', 's')), {}, operations, constants) == 0


@pytest.mark.parametrize('text, expected', [
    ("x = s(s(x))", True),
    ("U(x) -> x = w", True),
    ("U(s(x)) -> x = w", False),
    ("f(x) = f(y) -> x = y", False),
    ("U(w)", True),
])
def test_satisfies(structure, text, expected):
    assert satisfies(structure, parse_law(text)) is expected


def test_uninterpreted(structure):
    with pytest.raises(UninterpretedSymbolError, match="symbol: Q"):
        satisfies(structure, parse_law("Q(x)"))
    with pytest.raises(UninterpretedSymbolError, match="symbol: g"):
        satisfies(structure, parse_law("x = g(x)"))


def test_violated_law(structure):
    laws = [parse_law("x = s(s(x))"), parse_law("U(s(x)) -> x = w")]
    assert str(violated_law(structure, laws)) == "U(s(x)) -> x = w"
    assert violated_law(structure, laws[:1]) is None


def test_enumerate_models():
    trivial, _ = load_fixture('trivial')
    assert len(list(enumerate_models(present_first(trivial), 3))) == 1
    models = list(enumerate_models(present_second(trivial), 3))
    assert [model.size for model in models] == [1]
    assert models[0].constants == {'e': 0}

    # U(x) -> P_1(x) leaves three predicate choices on one element
    chain, _ = load_fixture('chain3')
    models = list(enumerate_models(present_first(chain), 3))
    assert len(models) == 3
    assert all(model.predicates['U'] <= model.predicates['P_1']
               for model in models)

    with pytest.raises(ValueError):
        next(enumerate_models(present_first(chain), 0))
