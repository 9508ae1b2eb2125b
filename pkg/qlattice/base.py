# -*- coding: utf-8 -*-
"""Declarative base for qlattice components and value types.

Every data type (semilattices, operators, congruences, lattices,
presentations) and every configurable component (readers, writers, suites,
run configuration) declares its fields with :class:`Property`. The declared
properties generate the ``__init__`` signature, the ``repr`` and the YAML
serialisation of the class.

An example would be:

.. code-block:: python

    class Chain(Base):
        '''A finite chain'''
        size = Property(int, doc="number of elements")
        name = Property(str, default="chain", doc="display name")

which is equivalent to ``def __init__(self, size, name="chain")``.

Value types mark their properties ``readonly=True``; these can be set once
(by the generated ``__init__``) and reassignment raises
:class:`AttributeError`. A custom ``__init__`` must keep the declared
positional order and forward to :func:`super`:

.. code-block:: python

    class Chain(Base):
        size = Property(int, readonly=True)

        def __init__(self, size, *args, **kwargs):
            if size < 1:
                raise ValueError("size must be positive")
            super().__init__(size, *args, **kwargs)
"""
import inspect
from abc import ABCMeta
from types import MappingProxyType


class Property:
    """Property(cls, default=inspect.Parameter.empty, doc=None, readonly=False)
    Declared attribute of a component class.

    The class is documentation for the user and for the configuration layer;
    it is not used for type checking. As ``None`` and ``False`` are sensible
    defaults, :attr:`Property.empty` marks a mandatory argument.

    Parameters
    ----------
    cls : class
        Expected class of the value.
    default : any, optional
        Default value; absent means the argument is mandatory.
    doc : str, optional
        Description rendered in the documentation.
    readonly : bool, optional
        If `True`, the value may only be assigned once.
    """
    empty = inspect.Parameter.empty
    _property_name = None

    def __init__(self, cls, *, default=inspect.Parameter.empty, doc=None,
                 readonly=False):
        self.cls = cls
        self.default = default
        self.doc = doc
        self.readonly = readonly

    def __get__(self, instance, owner):
        if instance is None:
            return self
        return getattr(instance, self._property_name)

    def __set__(self, instance, value):
        if self.readonly and hasattr(instance, self._property_name):
            raise AttributeError("{} is readonly".format(
                self._property_name[len("_property_"):]))
        setattr(instance, self._property_name, value)

    def __delete__(self, instance):
        if self.readonly:
            raise AttributeError("cannot delete readonly property")
        delattr(instance, self._property_name)

    def __set_name__(self, owner, name):
        if not isinstance(owner, BaseMeta):
            raise AttributeError("Cannot use Property on this class type")
        self._property_name = "_property_{}".format(name)


def _declared(cls, namespace):
    """Declared properties of a new class, inherited first, mandatory
    properties ahead of those with defaults."""
    declared = {}
    for parent in reversed(cls.mro()[1:]):
        if isinstance(parent, BaseMeta):
            declared.update(parent.properties)
    declared.update((name, value) for name, value in namespace.items()
                    if isinstance(value, Property))
    # A plain class attribute hides an inherited property
    declared = {name: property_ for name, property_ in declared.items()
                if isinstance(namespace.get(name, property_), Property)}
    mandatory = {name: property_ for name, property_ in declared.items()
                 if property_.default is Property.empty}
    return {**mandatory, **declared}


def _check_init(init, declared):
    """Raise `TypeError` unless `init` accepts the declared properties.

    Positional parameters after ``self`` must be a prefix of the declared
    names; a strict prefix needs ``*args`` and ``**kwargs``; keyword-only
    additions need defaults."""
    parameters = list(inspect.signature(init).parameters.values())[1:]
    kind = inspect.Parameter
    positional = [parameter.name for parameter in parameters
                  if parameter.kind in (kind.POSITIONAL_ONLY,
                                        kind.POSITIONAL_OR_KEYWORD)]
    names = list(declared)
    if positional != names[:len(positional)]:
        raise TypeError("init arguments don't match declared properties: "
                        "arguments do not match or wrong order")
    kinds = {parameter.kind for parameter in parameters}
    if positional != names and not {
            kind.VAR_POSITIONAL, kind.VAR_KEYWORD} <= kinds:
        raise TypeError("init arguments don't match declared properties: "
                        "missing argument (or *args and **kwargs missing)")
    if any(parameter.default is kind.empty for parameter in parameters
           if parameter.kind == kind.KEYWORD_ONLY):
        raise TypeError("new keyword arguments must have default value")


def _signature(init, declared):
    """Signature listing `declared` then the keyword-only extras."""
    signature = inspect.signature(init)
    self_, *rest = signature.parameters.values()
    return signature.replace(parameters=[self_] + [
        inspect.Parameter(name, inspect.Parameter.POSITIONAL_OR_KEYWORD,
                          default=property_.default)
        for name, property_ in declared.items()] + [
        parameter for parameter in rest
        if parameter.kind == parameter.KEYWORD_ONLY])


class BaseMeta(ABCMeta):
    """Metaclass collecting :class:`Property` declarations.

    The generated ``__init__`` signature lists mandatory properties first, in
    declaration order, followed by those with defaults. A custom ``__init__``
    must name the declared properties in that order, or accept ``*args`` and
    ``**kwargs``; it may add keyword-only arguments with defaults.
    """

    def __new__(mcls, name, bases, namespace):
        if '__init__' not in namespace:
            # Own function, so the parent's signature stays untouched
            def __init__(self, *args, **kwargs):
                super(cls, self).__init__(*args, **kwargs)
            namespace['__init__'] = __init__
        cls = super().__new__(mcls, name, bases, namespace)

        cls._subclasses = set()
        for parent in cls.mro()[1:]:
            if isinstance(parent, BaseMeta):
                parent._subclasses.add(cls)
        cls._properties = _declared(cls, namespace)
        _check_init(cls.__init__, cls._properties)
        cls.__init__.__signature__ = _signature(cls.__init__, cls._properties)
        return cls

    @property
    def subclasses(cls):
        """Set of subclasses for the class"""
        return frozenset(cls._subclasses)

    @property
    def properties(cls):
        """Mapping of declared properties, in signature order"""
        return MappingProxyType(cls._properties)


class Base(metaclass=BaseMeta):
    """Base class for qlattice components and types.

    Binds the call arguments against the generated signature and assigns
    every declared property. Subclasses overriding ``__init__`` should call
    this through :func:`super`."""

    def __init__(self, *args, **kwargs):
        arguments = inspect.signature(self.__init__).bind(*args, **kwargs)
        arguments.apply_defaults()
        for name, value in arguments.arguments.items():
            setattr(self, name, value)

    def __repr__(self):
        return "{}({})".format(type(self).__name__, ", ".join(
            "{}={!r}".format(name, getattr(self, name))
            for name in type(self).properties))
