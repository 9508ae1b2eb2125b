# -*- coding: utf-8 -*-
import pytest

from ...exceptions import MonoidPropertyError
from ...fixtures import COMBINED, load_fixture
from ...presentation.emitter import present_combined, present_second
from ...presentation.text import parse_law
from ...reader.presentation import LawReader
from ..pipeline import (
    ideal_congruence, verify_combined, verify_first, verify_lemma1,
    verify_pseudo_lemma, verify_pseudoprop, verify_reduction, verify_second,
    verify_star_filters)
from ..free import free_structure


def _names(report):
    return [check.name for check in report.checks]


@pytest.mark.parametrize('name', COMBINED)
def test_verify_combined(name):
    report = verify_combined(*load_fixture(name))
    assert report.passed, report.lines()
    for claim in ('claim1', 'claim2', 'claim3', 'claim4', 'claim5',
                  'isomorphism'):
        assert claim in _names(report)
    assert report.values['k_congruences'] == report.values['ideals']


def test_verify_combined_one_element(trivial_instance):
    report = verify_combined(*trivial_instance)
    assert report.passed, report.lines()
    assert 'free_model' in _names(report)
    assert 'isomorphism' in _names(report)
    assert report.values['k_congruences'] == report.values['ideals'] == 1


def test_verify_combined_requirements(collapse_instance):
    with pytest.raises(MonoidPropertyError):
        verify_combined(*collapse_instance)


def test_ideal_congruence(s22_swap_instance):
    semilattice, monoid = s22_swap_instance
    structure = free_structure(semilattice, monoid)
    # facts A(f(x)) with f(a) = 0 are the structure's own
    congruence = ideal_congruence(semilattice, monoid, structure,
                                  frozenset({0}))
    assert congruence.theta1 == structure.atoms()
    whole = ideal_congruence(semilattice, monoid, structure,
                             frozenset(range(4)))
    assert whole.theta0 == (0, 0, 0)


@pytest.mark.parametrize('name', ['trivial', 'chain3', 's22'])
def test_verify_eon_styles(name):
    semilattice, _ = load_fixture(name)
    second = verify_second(semilattice)
    assert second.passed, second.lines()
    assert 'isomorphism' in _names(second)
    first = verify_first(semilattice)
    assert first.passed, first.lines()


@pytest.mark.parametrize('name, congruences', [
    ('chain3', 4), ('s22', 7), ('s22-swap', 3)])
def test_verify_lemma1(name, congruences):
    report = verify_lemma1(*load_fixture(name))
    assert report.passed
    assert report.values['congruences'] == report.values['eons'] \
        == congruences
    assert 'oracle' in _names(report)


def test_verify_lemma1_above_bound(s22_instance):
    report = verify_lemma1(*s22_instance, eon_bound=2)
    assert 'oracle' not in _names(report)


def test_verify_reduction(fixture_dir):
    context = present_combined(*load_fixture('s22-swap'))
    with LawReader(fixture_dir / "s22_swap.laws", context=context) as reader:
        laws = list(reader)
    assert len(laws) == 4
    report = verify_reduction(context, laws, max_size=3)
    assert report.passed, report.lines()
    assert report.values['laws'] == 4
    assert report.values['models'] > 0
    assert _names(report) == ['one_variable', 'equivalence', 'kernel']


def test_verify_reduction_second(chain3_instance):
    context = present_second(chain3_instance[0])
    laws = [parse_law("E(x) & x = y -> P_1(y)", context)]
    report = verify_reduction(context, laws, max_size=3)
    assert report.passed
    assert 'kernel' not in _names(report)


def test_verify_reduction_larger_models(chain3_instance):
    context = present_combined(*chain3_instance)
    laws = [parse_law("P_1(x) & x = y -> U(y)", context),
            parse_law("P_1(x) & P_1(y) -> x = y", context)]
    report = verify_reduction(context, laws, max_size=4)
    assert report.passed, report.lines()
    assert report.values['models'] == 15


@pytest.mark.parametrize('reducer', [
    lambda law, context: [],
    lambda law, context: [parse_law("P_1(x) -> U(w)", context)],
], ids=['dropped', 'substituted'])
def test_verify_reduction_broken(chain3_instance, reducer):
    context = present_combined(*chain3_instance)
    law = parse_law("P_1(x) & x = y -> U(y)", context)
    report = verify_reduction(context, [law], max_size=3, reducer=reducer)
    assert not report.passed
    assert not report.check('equivalence').passed
    assert report.check('equivalence').witness == str(law)


@pytest.mark.parametrize('name', ['chain3', 's22', 's22-swap'])
def test_verify_star_filters(name):
    report = verify_star_filters(*load_fixture(name))
    assert report.passed, report.lines()


def test_verify_pseudoprop(s22_swap_instance):
    report = verify_pseudoprop(*s22_swap_instance)
    assert report.passed
    assert report.values['k'] == 'a'
    assert _names(report) == ['pseudoprop', 'top_equalises', 'infinite_note']

    omega = verify_pseudoprop(*load_fixture('omega-truncation'))
    assert omega.values['fixes_top'] is False
    assert _names(omega) == ['infinite_note']


@pytest.mark.parametrize('name', COMBINED)
def test_verify_pseudo_lemma(name):
    report = verify_pseudo_lemma(*load_fixture(name))
    assert report.passed, report.lines()
    assert 'upsilon_generated' in _names(report)
