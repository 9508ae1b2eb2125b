# -*- coding: utf-8 -*-
"""Built-in instances, runnable without input files.

Semilattice fixtures are ``(Semilattice, OperatorMonoid)`` pairs. Besides
those, ``dual-leaf`` is a :class:`~.FiniteLattice` and ``dual-near-leaf``
a :class:`~.Presentation`.
"""
import re

import numpy as np

from .analysis.constructions import dual_leaf
from .monoid import monoid_closure
from .presentation.emitter import present_dual_near_leaf
from .types.operator import Operator
from .types.semilattice import Semilattice

#: Join table of the four-element Boolean lattice 0 < a, b < 1
S22_JOIN = ((0, 1, 2, 3),
            (1, 1, 3, 3),
            (2, 3, 2, 3),
            (3, 3, 3, 3))


def chain_semilattice(size, labels=None):
    """Chain ``0 < 1 < ... < size - 1`` with join the maximum."""
    indices = np.arange(size)
    return Semilattice(np.maximum.outer(indices, indices), labels)


def chain3():
    semilattice = chain_semilattice(3, ('0', 'a', '1'))
    return semilattice, monoid_closure([], semilattice)


def s22():
    semilattice = Semilattice(S22_JOIN, ('0', 'a', 'b', '1'))
    return semilattice, monoid_closure([], semilattice)


def s22_swap():
    semilattice = Semilattice(S22_JOIN, ('0', 'a', 'b', '1'))
    return semilattice, monoid_closure(
        [Operator((0, 2, 1, 3), 's')], semilattice)


def trivial():
    semilattice = Semilattice([[0]])
    return semilattice, monoid_closure([], semilattice)


def omega_truncation(size=4):
    """Chain on ``size`` elements with ``p(0) = 0`` and ``p(x) = x - 1``."""
    if size < 1:
        raise ValueError("omega-truncation needs a positive size")
    semilattice = chain_semilattice(size)
    return semilattice, monoid_closure(
        [Operator([max(x - 1, 0) for x in range(size)], 'p')], semilattice)


INSTANCES = {
    'chain3': chain3,
    's22': s22,
    's22-swap': s22_swap,
    'trivial': trivial,
    'omega-truncation': omega_truncation,
}

#: Fixtures meeting the combined presentation's monoid requirements
COMBINED = ('chain3', 's22-swap', 's22')

NAMES = tuple(INSTANCES) + ('dual-leaf', 'dual-near-leaf')

_NAME = re.compile(r"^([a-z0-9-]+?)(?:[(:](\d+)\)?)?$")


def load_fixture(name, schema_bound=4):
    """Fixture by name; ``omega-truncation`` takes a size as
    ``omega-truncation:5`` or ``omega-truncation(5)``.

    Raises
    ------
    ValueError
        For an unknown name.
    """
    match = _NAME.match(name)
    if match is None or match.group(1) not in NAMES:
        raise ValueError("unknown fixture {!r}; expected one of {}".format(
            name, ", ".join(NAMES)))
    key, argument = match.groups()
    if argument is not None and key != 'omega-truncation':
        raise ValueError("fixture {!r} takes no size".format(key))
    if key == 'dual-leaf':
        return dual_leaf()
    if key == 'dual-near-leaf':
        return present_dual_near_leaf(schema_bound)
    if argument is not None:
        return INSTANCES[key](int(argument))
    return INSTANCES[key]()
