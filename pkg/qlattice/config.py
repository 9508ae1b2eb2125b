# -*- coding: utf-8 -*-
"""Provides an ability to generate and load configuration from YAML.

qlattice utilises YAML_ for configuration files. The :doc:`qlattice.base`
feature of components is exploited in order to store the configuration of a
run as a tagged :class:`RunConfig` mapping:

.. code-block:: yaml

    !qlattice.config.RunConfig
    command: verify
    target: combined
    input: !pathlib.Path fixtures/s22_swap.slat
    seed: 7

.. _YAML: http://yaml.org/"""
from abc import ABC, abstractmethod
from io import StringIO
from pathlib import Path

from .base import Base, Property
from .congruence.eon import EXHAUSTIVE_BOUND
from .monoid import CLOSURE_BOUND
from .serialise import YAML
from .verifier.model import MODEL_SIZE

#: Output formats of lattice results
OUTPUT_FORMATS = ('text', 'dot', 'edges')

#: Eon lattice computation modes
EON_MODES = ('auto', 'exhaustive', 'closure')


class ConfigurationFile(ABC):
    """Base configuration class."""

    @abstractmethod
    def dump(self, data, stream, *args, **kwargs):
        """Dump configuration to a stream."""
        raise NotImplementedError

    def dumps(self, data, *args, **kwargs):
        """Return configuration as a string."""
        stream = StringIO()
        self.dump(data, stream, *args, **kwargs)
        return stream.getvalue()

    @abstractmethod
    def load(self, stream):
        """Load configuration from a stream."""
        raise NotImplementedError


class YAMLConfigurationFile(ConfigurationFile):
    """Configuration stored as YAML through :class:`~.YAML`."""

    def __init__(self):
        self._yaml = YAML()

    def dump(self, data, stream, *args, **kwargs):
        self._yaml.dump(data, stream, *args, **kwargs)

    def load(self, stream):
        data = self._yaml.load(stream)
        if not isinstance(data, RunConfig):
            raise ValueError("configuration is not a RunConfig")
        return data


class RunConfig(Base):
    """Settings of one command line run.

    Every bound must be positive; the seed is recorded in the header of
    every report."""
    command = Property(str, default=None, doc="Subcommand, e.g. ``verify``")
    target = Property(str, default=None,
                      doc="Subcommand target, e.g. ``combined``")
    input = Property(Path, default=None, doc="Input file")
    extra = Property(Path, default=None,
                     doc="Second input file (laws for ``verify reduce``)")
    fixture = Property(str, default=None, doc="Built-in fixture name")
    output_format = Property(str, default='text',
                             doc="``text``, ``dot`` or ``edges``")
    closure_bound = Property(int, default=CLOSURE_BOUND,
                             doc="Largest operator monoid")
    eon_exhaustive_bound = Property(
        int, default=EXHAUSTIVE_BOUND,
        doc="Largest carrier for exhaustive eon relation scans")
    eon_mode = Property(str, default='auto',
                        doc="Eon lattice mode: ``auto``, ``exhaustive`` or "
                            "``closure``")
    model_size = Property(int, default=MODEL_SIZE,
                          doc="Largest model checked for law equivalence")
    schema_bound = Property(int, default=4,
                            doc="Truncation of the dual near-leaf schemata")
    seed = Property(int, default=0, doc="Seed for randomised sweeps")
    suites = Property(list, default=None,
                      doc="Suites run by ``sweep``; all when empty")
    instances = Property(int, default=None,
                         doc="Random instance count override for ``sweep``")

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        for name in ('input', 'extra'):
            value = getattr(self, name)
            if value is not None and not isinstance(value, Path):
                setattr(self, name, Path(value))
        for name in ('closure_bound', 'eon_exhaustive_bound', 'model_size',
                     'schema_bound'):
            if getattr(self, name) < 1:
                raise ValueError("{} must be positive".format(name))
        if self.instances is not None and self.instances < 1:
            raise ValueError("instances must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError("unknown output format {!r}".format(
                self.output_format))
        if self.eon_mode not in EON_MODES:
            raise ValueError("unknown eon mode {!r}".format(self.eon_mode))
