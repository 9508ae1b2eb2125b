# -*- coding: utf-8 -*-
import pytest

from ...exceptions import ParseError
from ...fixtures import load_fixture
from ...types.presentation import Equation, Predication, Term
from ..emitter import present_dual_near_leaf, present_second
from ..text import parse, parse_law, parse_laws, render

TEXT = """\
# example
style combined
pred P_1 P_2 U
fun i s
const w
s(w) = w
U(x) -> x = w
P_1(x) & P_2(x) -> U(x)
"""


def test_parse():
    presentation = parse(TEXT)
    assert presentation.style == 'combined'
    assert presentation.predicates == ('P_1', 'P_2', 'U')
    assert presentation.functions == ('i', 's')
    assert presentation.comments == ('example',)
    law = presentation.laws[2]
    assert law.conclusion == Predication('U', Term('x'))
    assert len(law.premises) == 2
    assert presentation.laws[0].conclusion \
        == Equation(Term('w'), Term('w', ('s',)))


def test_render():
    assert render(parse(TEXT)) == TEXT.replace("s(w) = w", "w = s(w)")


def test_round_trip_with_comments():
    with pytest.warns(UserWarning):
        presentation = present_dual_near_leaf(3)
    assert parse(render(presentation)) == presentation


def test_parse_law_alias():
    context = present_second(load_fixture('chain3')[0])
    law = parse_law("E(x) -> x = e", context)
    assert law.premises == (Predication('U', Term('x')),)


def test_parse_laws():
    context = parse(TEXT)
    laws = parse_laws("# comment\nU(s(x)) -> P_1(x)\n\nx = s(y)\n", context)
    assert [str(law) for law in laws] == ["U(s(x)) -> P_1(x)", "x = s(y)"]


@pytest.mark.parametrize('text, line, column, message', [
    ("pred P\nP(x)\n", 1, 1, "missing style declaration"),
    ("style first\npred P\nQ(x)\n", 3, 1, "unknown predicate 'Q'"),
    ("style first\npred P\nP(x\n", 3, 2, "unclosed '('"),
    ("style first\npred P\nx\n", 3, 1, "expected '=' after term"),
    ("style first\npred P\nP(x) & P(y)\n", 3, 12,
     "conjunction without '->'"),
    ("style first second\n", 1, 1, "style takes one value"),
])
def test_parse_errors(text, line, column, message):
    with pytest.raises(ParseError) as excinfo:
        parse(text)
    assert (excinfo.value.line, excinfo.value.column) == (line, column)
    assert message in str(excinfo.value)
