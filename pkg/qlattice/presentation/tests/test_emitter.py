# -*- coding: utf-8 -*-
import itertools

import pytest

from ...exceptions import MonoidPropertyError
from ...fixtures import load_fixture
from ...reader.presentation import PresentationReader
from ...types.presentation import QuasiIdentity
from ...verifier.model import enumerate_models, violated_law
from ..emitter import (
    cover_laws, implication_laws, irredundant_covers, present_combined,
    present_dual_near_leaf, present_first, present_second,
    representative_cover_laws, representatives)
from ..text import parse, render


def _laws(presentation):
    return [str(law) for law in presentation.laws]


def test_order_laws(chain3_instance, s22_instance):
    chain, _ = chain3_instance
    assert [str(law) for law in implication_laws(chain)] \
        == ["U(x) -> P_1(x)"]
    assert cover_laws(chain) == []
    s22, _ = s22_instance
    assert [str(law) for law in cover_laws(s22)] \
        == ["P_1(x) & P_2(x) -> U(x)"]


def test_first(chain3_instance):
    presentation = present_first(chain3_instance[0])
    assert presentation.style == 'first'
    assert presentation.predicates == ('P_1', 'U')
    assert _laws(presentation) == ["x = y", "U(x) -> P_1(x)"]


def test_second(chain3_instance, trivial_instance):
    presentation = present_second(chain3_instance[0])
    assert presentation.constants == ('e',)
    assert _laws(presentation) == [
        "P_1(e)", "U(e)", "U(x) -> x = e", "U(x) -> P_1(x)"]
    assert presentation.aliases == {'E': 'U'}

    degenerate = present_second(trivial_instance[0])
    assert degenerate.predicates == ()
    assert _laws(degenerate) == ["x = e"]


def test_combined_trivial(trivial_instance):
    presentation = present_combined(*trivial_instance)
    assert _laws(presentation) == ["w = i(w)", "x = i(x)", "x = w"]


def test_combined_chain(chain3_instance):
    presentation = present_combined(*chain3_instance)
    assert presentation.functions == ('i',)
    assert presentation.constants == ('w',)
    assert _laws(presentation) == [
        "w = i(w)", "x = i(x)", "U(x) -> x = w", "P_1(w)", "U(w)",
        "U(x) -> P_1(x)"]


def test_combined_swap(s22_swap_instance, fixture_dir):
    presentation = present_combined(*s22_swap_instance)
    assert "x = s(s(x))" in _laws(presentation)
    assert "x = s(x) -> x = w" in _laws(presentation)
    assert presentation.composition == {('s', 's'): 'i'}
    with PresentationReader(fixture_dir / "s22_swap.qv") as reader:
        stored = reader.read()
    assert stored.laws == presentation.laws


def test_representatives(s22_swap_instance):
    semilattice, monoid = s22_swap_instance
    assert [str(atom) for atom in representatives(semilattice, monoid, 1)] \
        == ["P_1(x)", "P_2(s(x))"]
    assert representatives(semilattice, monoid, 0) == []


def test_irredundant_covers(s22_instance):
    semilattice, _ = s22_instance
    covers = irredundant_covers(semilattice)
    assert ((1,), 1) in covers
    assert ((3,), 1) in covers
    assert ((1, 2), 3) in covers
    # a alone already reaches a
    assert ((1, 2), 1) not in covers


def test_representative_cover_laws(s22_swap_instance):
    laws = representative_cover_laws(*s22_swap_instance)
    assert [str(law) for law in laws if len(law.premises) > 1] == [
        "P_1(x) & P_2(x) -> U(x)",
        "P_1(x) & P_2(x) -> U(s(x))",
        "P_1(x) & P_1(s(x)) -> U(x)",
        "P_1(x) & P_1(s(x)) -> U(s(x))",
        "P_2(x) & P_2(s(x)) -> U(x)",
        "P_2(x) & P_2(s(x)) -> U(s(x))",
        "P_1(s(x)) & P_2(s(x)) -> U(x)",
        "P_1(s(x)) & P_2(s(x)) -> U(s(x))"]
    assert "U(s(x)) -> P_2(x)" in [str(law) for law in laws]


def test_redundant_covers_hold(s22_swap_instance):
    # every pair b1, b2 with a <= b1 + b2, redundant or not
    semilattice, monoid = s22_swap_instance
    nonzero = list(semilattice.nonzero())
    laws = [
        QuasiIdentity(betas, alpha)
        for a, b1, b2 in itertools.product(nonzero, repeat=3)
        if semilattice.leq(a, semilattice.join[b1, b2])
        for betas in itertools.product(
            representatives(semilattice, monoid, b1),
            representatives(semilattice, monoid, b2))
        for alpha in representatives(semilattice, monoid, a)]
    models = list(enumerate_models(present_combined(semilattice, monoid), 3))
    assert len(models) > 1
    for model in models:
        assert violated_law(model, laws) is None


@pytest.mark.parametrize('name, flag', [
    ('omega-truncation', 'right_cancellative')])
def test_combined_requirements(name, flag):
    with pytest.raises(MonoidPropertyError) as excinfo:
        present_combined(*load_fixture(name))
    assert excinfo.value.flag == flag


def test_combined_collapse(collapse_instance):
    with pytest.raises(MonoidPropertyError, match="right_cancellative"):
        present_combined(*collapse_instance)


def test_dual_near_leaf():
    with pytest.warns(UserWarning, match="truncated at k=2"):
        presentation = present_dual_near_leaf(2)
    assert presentation.style == 'fixture'
    assert presentation.predicates == ('A', 'B', 'C', 'D')
    assert "x = f(f(x)) -> x = e" in _laws(presentation)
    assert "x = g(g(g(x))) -> x = e" not in _laws(presentation)
    assert presentation.comments[-1] == "schemata over k > 0 truncated at k=2"
    assert len(presentation.laws) == 20
    with pytest.raises(ValueError):
        present_dual_near_leaf(0)


@pytest.mark.parametrize('build', [
    lambda: present_first(load_fixture('s22')[0]),
    lambda: present_second(load_fixture('s22')[0]),
    lambda: present_combined(*load_fixture('s22-swap')),
])
def test_render_parse(build):
    presentation = build()
    assert parse(render(presentation)) == presentation
