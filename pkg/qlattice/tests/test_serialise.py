# -*- coding: utf-8 -*-
import pathlib

import numpy as np
import pytest
from ruamel.yaml.constructor import ConstructorError

from ..base import Property
from ..config import RunConfig
from ..serialise import YAML
from ..types.operator import Operator
from ..types.semilattice import Semilattice


@pytest.fixture()
def serialised_file():
    return YAML()


def test_declarative(component, serialised_file):
    instance = component(2, "20")
    instance.new_property = True

    serialised_str = serialised_file.dumps(instance)

    assert 'bound' not in serialised_str  # Default, no need to store

    new_instance = serialised_file.load(serialised_str)
    assert isinstance(new_instance, component)
    assert new_instance.size == instance.size
    assert new_instance.label == instance.label
    assert new_instance.bound == instance.bound
    with pytest.raises(AttributeError):
        new_instance.new_property


def test_nested_declarative(component, serialised_file):
    nested_instance = component(1, "nested")
    instance = component(2, "primary", nested_instance)

    new_instance = serialised_file.load(serialised_file.dumps(instance))
    assert isinstance(new_instance.bound, component)
    assert new_instance.label == "primary"
    assert new_instance.bound.label == "nested"


def test_duplicate_tag_warning(component, serialised_file):
    class _TestDuplicateBase(component):
        pass

    first_class = _TestDuplicateBase

    class _TestDuplicateBase(component):  # noqa:F811
        pass

    second_class = _TestDuplicateBase

    serialised_str = serialised_file.dumps(first_class(2, "20"))

    with pytest.warns(UserWarning):
        new_instance = serialised_file.load(serialised_str)

    assert isinstance(new_instance, (first_class, second_class))


def test_numpy(component, serialised_file):
    class _TestNumpy(component):
        table = Property(np.ndarray)

    instance = _TestNumpy(1, "two",
                          table=np.array([[1, 2], [3, 4], [5, 6]]))

    new_instance = serialised_file.load(serialised_file.dumps(instance))
    assert isinstance(new_instance.table, np.ndarray)
    assert np.array_equal(instance.table, new_instance.table)


def test_semilattice(serialised_file, s22_instance):
    semilattice, _ = s22_instance
    serialised_str = serialised_file.dumps(semilattice)
    assert '!qlattice.types.semilattice.Semilattice' in serialised_str
    assert '[1, 1, 3, 3]' in serialised_str  # rows in flow style

    new_semilattice = serialised_file.load(serialised_str)
    assert new_semilattice == semilattice
    assert new_semilattice.labels == ('0', 'a', 'b', '1')


def test_operator_tuple(serialised_file):
    operator = Operator((0, 2, 1, 3), 's')
    serialised_str = serialised_file.dumps(operator)
    assert '!tuple [0, 2, 1, 3]' in serialised_str

    new_operator = serialised_file.load(serialised_str)
    assert new_operator == operator
    assert new_operator.name == 's'


def test_path(serialised_file):
    path = pathlib.Path("fixtures/s22_swap.slat")
    serialised_str = serialised_file.dumps(path)
    assert "fixtures/s22_swap.slat" in serialised_str
    assert serialised_file.load(serialised_str) == path


def test_run_config(serialised_file):
    config = RunConfig(command='verify', target='combined',
                       input='fixtures/s22_swap.slat', seed=7)
    serialised_str = serialised_file.dumps(config)
    assert 'output_format' not in serialised_str

    new_config = serialised_file.load(serialised_str)
    assert isinstance(new_config, RunConfig)
    assert new_config.input == pathlib.Path("fixtures/s22_swap.slat")
    assert new_config.seed == 7


def test_anchor(component, serialised_file):
    instance = component(2, "20")

    serialised_str = serialised_file.dumps(
        [instance, instance, {"key": instance}])
    assert '&id001' in serialised_str
    assert '*id001' in serialised_str

    new_instances = serialised_file.load(serialised_str)
    assert new_instances[0] is new_instances[1]
    assert new_instances[0] is new_instances[2]['key']


def test_bad_tag(serialised_file):
    serialised_str = """
        test1: !qlattice.tests.this.does.not.exist
            - size: 2
        """

    with pytest.raises(ConstructorError, match="unable to import component"):
        serialised_file.load(serialised_str)


def test_missing_property(component, serialised_file):
    serialised_str = "\n".join(
        line
        for line in serialised_file.dumps(component(2, "20")).split("\n")
        if 'label' not in line)

    with pytest.raises(ConstructorError, match="missing a required argument"):
        serialised_file.load(serialised_str)
