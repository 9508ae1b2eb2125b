# -*- coding: utf-8 -*-
"""Seeded random instances and quasi-identities.

All randomness is drawn from a :class:`numpy.random.Generator`, so a seed
fixes every instance."""
import numpy as np

from ..base import Property
from ..monoid import monoid_closure
from ..semilattice import automorphisms, operators
from ..types.operator import Operator
from ..types.presentation import (
    VARIABLES, Equation, Predication, QuasiIdentity, Term)
from .base import InstanceGenerator
from .exhaustive import semilattices


def _pick(rng, items):
    return items[int(rng.integers(len(items)))]


def random_semilattice(rng, max_size=5, min_size=1):
    """Uniform choice among the isomorphism classes of the given sizes."""
    return _pick(rng, semilattices(max_size, min_size))


def random_endomorphism_monoid(rng, semilattice):
    """Monoid generated by one random operator, named ``f``."""
    generator = _pick(rng, operators(semilattice))
    return monoid_closure([Operator(generator.images, 'f')], semilattice)


def random_automorphism_group(rng, semilattice, max_order=3):
    """Cyclic automorphism group of order at most `max_order`.

    Groups of order at most 3 are cyclic, so one generator suffices;
    the generator is named ``s``."""
    groups = {}
    for automorphism in automorphisms(semilattice):
        group = monoid_closure([Operator(automorphism.images, 's')],
                               semilattice)
        if len(group) <= max_order:
            groups.setdefault(frozenset(group.elements), group)
    keys = sorted(groups, key=lambda key: sorted(op.images for op in key))
    return groups[_pick(rng, keys)]


def _random_term(rng, presentation, variables, max_depth):
    bases = list(variables)
    if presentation.constants and rng.random() < 0.2:
        bases = list(presentation.constants)
    functions = [_pick(rng, presentation.functions)
                 for _ in range(int(rng.integers(max_depth + 1)))] \
        if presentation.functions else []
    return Term(_pick(rng, bases), functions)


def _random_atom(rng, presentation, variables, max_depth):
    if presentation.predicates and rng.random() < 0.5:
        return Predication(_pick(rng, presentation.predicates),
                           _random_term(rng, presentation, variables,
                                        max_depth))
    return Equation(
        _random_term(rng, presentation, variables, max_depth),
        _random_term(rng, presentation, variables, max_depth))


def random_quasi_identity(rng, presentation, max_variables=3,
                          max_premises=3, max_depth=2):
    """Random law over the signature of `presentation`.

    Uses at most `max_variables` variables, `max_premises` premises and
    terms with at most `max_depth` function symbols."""
    variables = VARIABLES[:int(rng.integers(1, max_variables + 1))]
    premises = [_random_atom(rng, presentation, variables, max_depth)
                for _ in range(int(rng.integers(max_premises + 1)))]
    return QuasiIdentity(
        premises, _random_atom(rng, presentation, variables, max_depth))


class RandomInstanceGenerator(InstanceGenerator):
    """Seeded random semilattices with a random monoid.

    ``kind='endomorphism'`` takes the monoid generated by one random
    operator; ``kind='automorphism'`` a cyclic automorphism group."""

    count = Property(int, doc="Number of instances")
    seed = Property(int, default=0, doc="Random seed")
    max_size = Property(int, default=5, doc="Largest carrier size")
    kind = Property(str, default='endomorphism',
                    doc="``'endomorphism'`` or ``'automorphism'``")
    max_order = Property(int, default=3,
                         doc="Largest automorphism group order")

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        if self.kind not in ('endomorphism', 'automorphism'):
            raise ValueError("unknown instance kind {!r}".format(self.kind))

    def instances(self):
        rng = np.random.default_rng(self.seed)
        for _ in range(self.count):
            semilattice = random_semilattice(rng, self.max_size)
            if self.kind == 'endomorphism':
                monoid = random_endomorphism_monoid(rng, semilattice)
            else:
                monoid = random_automorphism_group(rng, semilattice,
                                                   self.max_order)
            yield semilattice, monoid
