# -*- coding: utf-8 -*-
from .base import InstanceGenerator
from .exhaustive import ExhaustiveGenerator, semilattices
from .random import (
    RandomInstanceGenerator, random_quasi_identity, random_semilattice)

__all__ = ['InstanceGenerator', 'ExhaustiveGenerator', 'semilattices',
           'RandomInstanceGenerator', 'random_quasi_identity',
           'random_semilattice']
