# -*- coding: utf-8 -*-
"""YAML form of qlattice components and value types.

Declared :class:`~.Property` values of a :class:`~.Base` subclass are stored
as an ordered mapping under a tag naming the class, for example:

.. code-block:: yaml

    !qlattice.types.operator.Operator
    images: !tuple [0, 2, 1, 3]
    name: s

Properties still holding their default are omitted. Join tables and order
matrices are numpy arrays written one flow-style row per line, tuples keep
their type through a ``!tuple`` tag and paths through ``!pathlib.Path``.
"""
import warnings
from collections import OrderedDict
from importlib import import_module
from io import StringIO
from pathlib import Path

import numpy as np
import ruamel.yaml
from ruamel.yaml.constructor import ConstructorError

from .base import Base

PACKAGE = __name__.split('.', 1)[0]
ARRAY_TAG = "!numpy.ndarray"
TUPLE_TAG = "!tuple"
PATH_TAG = "!pathlib.Path"


def yaml_tag(class_):
    """Tag of a declarative class: ``!module.QualifiedName``."""
    return "!{}.{}".format(class_.__module__, class_.__qualname__)


def find_class(tag_suffix):
    """Declarative class named by a tag, relative to the package.

    Known subclasses of :class:`~.Base` are searched first; otherwise the
    module is imported.

    Raises
    ------
    ImportError
        If no such class exists.
    """
    tag = "!{}.{}".format(PACKAGE, tag_suffix)
    matches = [class_ for class_ in Base.subclasses if yaml_tag(class_) == tag]
    if len(matches) > 1:
        warnings.warn("Multiple possible classes found for YAML tag "
                      "{!r}".format(tag), UserWarning)
    if matches:
        return matches[0]
    module_name, _, class_name = tag_suffix.rpartition(".")
    module = import_module("{}.{}".format(PACKAGE, module_name))
    try:
        return getattr(module, class_name)
    except AttributeError:
        raise ImportError("Unable to find {!r}".format(tag)) from None


def declared_values(component):
    """Declared properties of `component` that differ from their default."""
    values = OrderedDict()
    for name, property_ in type(component).properties.items():
        value = getattr(component, name)
        if value is not property_.default:
            values[name] = value
    return values


class YAML:
    """Dump and load qlattice objects as YAML."""

    def __init__(self):
        self._yaml = ruamel.yaml.YAML()
        self._yaml.default_flow_style = False
        representer = self._yaml.representer
        constructor = self._yaml.constructor

        representer.add_multi_representer(Base, self._represent_component)
        constructor.add_multi_constructor(
            "!{}.".format(PACKAGE), self._construct_component)

        representer.add_multi_representer(np.ndarray, self._represent_array)
        representer.add_multi_representer(
            np.integer, lambda dumper, node: dumper.represent_int(int(node)))
        constructor.add_constructor(ARRAY_TAG, self._construct_array)

        representer.add_representer(tuple, self._represent_tuple)
        constructor.add_constructor(TUPLE_TAG, self._construct_tuple)

        representer.add_multi_representer(
            Path, lambda dumper, node: dumper.represent_scalar(
                PATH_TAG, str(node)))
        constructor.add_constructor(
            PATH_TAG, lambda loader, node: Path(loader.construct_scalar(node)))

    def dump(self, data, stream, **kwargs):
        return self._yaml.dump(data, stream, **kwargs)

    def dumps(self, data, **kwargs):
        """Return the YAML text of `data`."""
        stream = StringIO()
        self.dump(data, stream, **kwargs)
        return stream.getvalue()

    def load(self, stream):
        return self._yaml.load(stream)

    @staticmethod
    def _represent_component(dumper, component):
        return dumper.represent_omap(
            yaml_tag(type(component)), declared_values(component))

    @staticmethod
    def _construct_component(loader, tag_suffix, node):
        try:
            class_ = find_class(tag_suffix)
        except ImportError:
            raise ConstructorError(
                "while constructing a qlattice component", node.start_mark,
                "unable to import component {!r}".format(tag_suffix),
                node.start_mark)
        values, = loader.construct_yaml_omap(node)
        try:
            return class_(**values)
        except Exception as err:
            raise ConstructorError(
                "while constructing a qlattice component", node.start_mark,
                str(err), node.start_mark)

    def _flow(self, items):
        sequence = self._yaml.seq(items)
        sequence.fa.set_flow_style()
        return sequence

    def _represent_array(self, dumper, array):
        # Tables one row per line
        if array.ndim > 1:
            rows = [self._flow(row) for row in array.tolist()]
        else:
            rows = array.tolist()
        return dumper.represent_sequence(ARRAY_TAG, rows)

    @staticmethod
    def _construct_array(loader, node):
        return np.array(loader.construct_sequence(node, deep=True))

    def _represent_tuple(self, dumper, items):
        return dumper.represent_sequence(TUPLE_TAG, self._flow(items))

    @staticmethod
    def _construct_tuple(loader, node):
        return tuple(loader.construct_sequence(node, deep=True))
