# -*- coding: utf-8 -*-
import pytest

from ..base import Base, Property


def test_properties(component):
    assert 'size' in component.properties
    assert component(1, "2").size == 1
    assert component(1, "2").bound == 8


def test_repr(component):
    assert repr(component(1, "2")) \
        == "_Block(size=1, label='2', bound=8)"


def test_subclass(component):
    class _TestSubclass(component):
        pass
    assert _TestSubclass in component.subclasses


def test_subclass_remove_property(component):
    class _TestSubclassRemoveProperty(component):
        size = 2
    assert _TestSubclassRemoveProperty("2").size == 2


def test_default_moved_last():
    class _TestDefaults(Base):
        first = Property(int, default=0)
        second = Property(int)
    assert list(_TestDefaults.properties) == ['second', 'first']
    assert _TestDefaults(5).second == 5


def test_readonly():
    class _TestReadonly(Base):
        value = Property(int, readonly=True)
    instance = _TestReadonly(1)
    with pytest.raises(AttributeError, match="readonly"):
        instance.value = 2
    with pytest.raises(AttributeError):
        del instance.value
    assert instance.value == 1


def test_init_unordered(component):
    with pytest.raises(TypeError):
        class _TestUnordered(component):
            def __init__(self, label, *args, **kwargs):
                pass

    with pytest.raises(TypeError):
        class _TestUnordered(component):  # noqa: F811
            def __init__(self, label, size, *args, **kwargs):
                pass


def test_init_missing(component):
    with pytest.raises(TypeError):
        class _TestMissing(component):
            def __init__(self, size, label):
                pass

    with pytest.raises(TypeError):
        class _TestMissing(component):  # noqa: F811
            def __init__(self, size):
                pass


def test_init_new(component):
    with pytest.raises(TypeError):
        class _TestNew(component):
            def __init__(self, labels, *args, **kwargs):
                pass

    with pytest.raises(TypeError):
        class _TestNew(component):  # noqa: F811
            def __init__(self, *args, labels, **kwargs):
                pass

    class _TestNew(component):  # noqa: F811
        def __init__(self, *args, labels="default", **kwargs):
            pass
    assert not hasattr(_TestNew(1, "2", labels="10"), 'labels')


def test_non_base_property():
    with pytest.raises((RuntimeError, AttributeError)):
        class _TestNonBase:
            size = Property(int)
