# -*- coding: utf-8 -*-
import pytest

from ..fixtures import INSTANCES, NAMES, load_fixture
from ..types.lattice import FiniteLattice
from ..types.presentation import Presentation


@pytest.mark.parametrize('name', sorted(INSTANCES))
def test_instances(name):
    semilattice, monoid = load_fixture(name)
    assert monoid.semilattice == semilattice
    assert monoid.names[0] == 'i'


def test_omega_truncation_size():
    semilattice, monoid = load_fixture('omega-truncation:5')
    assert semilattice.size == 5
    assert load_fixture('omega-truncation(3)')[0].size == 3
    assert len(monoid) == 5


def test_other_fixtures():
    assert isinstance(load_fixture('dual-leaf'), FiniteLattice)
    with pytest.warns(UserWarning, match="truncated at k=2"):
        presentation = load_fixture('dual-near-leaf', schema_bound=2)
    assert isinstance(presentation, Presentation)
    assert set(NAMES) >= {'dual-leaf', 'dual-near-leaf', 's22-swap'}


@pytest.mark.parametrize('name', ['nope', 'chain3:4', 'omega-truncation:x'])
def test_unknown(name):
    with pytest.raises(ValueError):
        load_fixture(name)
