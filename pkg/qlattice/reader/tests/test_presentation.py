# -*- coding: utf-8 -*-
from textwrap import dedent

import pytest

from ...exceptions import ParseError
from ...presentation.text import parse_law
from ..presentation import LawReader, PresentationReader


def test_presentation_reader(fixture_dir):
    with PresentationReader(fixture_dir / "s22_swap.qv") as reader:
        presentation = reader.read()
    assert presentation.style == 'combined'
    assert presentation.functions == ('i', 's')
    assert presentation.comments == (
        "combined presentation of the Boolean lattice with the swap s",)
    assert presentation.identity == 'i'


def test_law_reader(fixture_dir):
    with PresentationReader(fixture_dir / "s22_swap.qv") as reader:
        context = reader.read()
    laws = list(LawReader(fixture_dir / "s22_swap.laws", context=context))
    assert laws[2] == parse_law("s(x) = y -> s(y) = x")
    assert all(law.symbols()[0] <= set(context.predicates) for law in laws)


def test_law_reader_unknown_predicate(tmpdir, fixture_dir):
    filename = tmpdir.join("bad.laws")
    with filename.open('w') as file:
        file.write(dedent("""\
            # one good law, one bad
            U(x) -> P_1(x)
            Q(x) -> U(x)
            """))
    with PresentationReader(fixture_dir / "s22_swap.qv") as reader:
        context = reader.read()
    with pytest.raises(ParseError) as excinfo:
        list(LawReader(filename.strpath, context=context))
    assert excinfo.value.line == 3

    # without a context any predicate is accepted
    assert len(list(LawReader(filename.strpath))) == 2
