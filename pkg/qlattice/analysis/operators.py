# -*- coding: utf-8 -*-
"""Checks on a semilattice with operators that mirror properties of its
congruence lattice: the pseudo-one equalisation, cofinal orbits, and the
congruences with a prescribed top block."""
import itertools

import numpy as np

from ..congruence.partition import (
    congruence_closure, congruence_lattice, is_compatible,
    principal_congruence)
from ..exceptions import StarConditionError, VerificationError
from ..functions import canonical_partition, mask_of
from ..types.filter import StarFilter, StarInterval, PseudopropResult
from ..types.relation import Congruence
from ..types.report import Report

INFINITE_NOTE = (
    "omega+1 with p(0)=0, p(x)=x-1 has no pseudo-one element; that failure "
    "needs an infinite carrier and is not reproducible by a finite check, "
    "where k = top always equalises when every operator fixes the top")


def orbit_joins(semilattice, monoid, element):
    """Join-closure of the orbit ``{g(k) : g ∈ M}``, empty join included."""
    closed = {0}
    for operator in monoid.elements:
        image = operator(element)
        closed |= {int(semilattice.join[image, j]) for j in closed}
    return sorted(closed)


def pseudoprop_check(semilattice, monoid):
    """Least ``k`` equalising every operator against the identity.

    Searches ``k`` in ascending order for which each ``s`` and each ``f`` in
    the monoid have some ``j`` in the join-closure of the orbit of ``k``
    with ``f(s) + j = s + j``. Records the least such ``j`` per
    ``(s, f)``."""
    join = semilattice.join
    for k in range(semilattice.size):
        candidates = orbit_joins(semilattice, monoid, k)
        witnesses = {}
        for s, operator in itertools.product(
                range(semilattice.size), monoid.elements):
            found = next((j for j in candidates
                          if join[operator(s), j] == join[s, j]), None)
            if found is None:
                break
            witnesses[s, operator.name] = found
        else:
            return PseudopropResult(k, witnesses, INFINITE_NOTE)
    return PseudopropResult(None, {}, INFINITE_NOTE)


def cofinal_compact_check(semilattice, monoid):
    """Compare cofinal orbits with compactness of the universal congruence.

    The universal congruence is ``con(0, top)`` on any finite carrier, so it
    is compact; the report lists every ``u`` whose orbit ``{f(u)}`` is
    cofinal."""
    order = semilattice.order
    top = semilattice.top
    cofinal = [u for u in range(semilattice.size)
               if any(order[top, operator(u)]
                      for operator in monoid.elements)]
    universal = principal_congruence(semilattice, monoid, 0, top)
    report = Report("cofinal", values={
        'cofinal': [semilattice.labels[u] for u in cofinal]})
    report.add("cofinal_exists", bool(cofinal))
    report.add("nabla_compact", universal == Congruence.universal(
        semilattice.size), "con(0,{})".format(semilattice.labels[top]))
    return report


def top_block(congruence, semilattice):
    """The filter ``1/θ``: the block of the top."""
    return StarFilter(mask_of(congruence.block(semilattice.top)))


def check_star_condition(semilattice, monoid, star_filter):
    """Raise :class:`~.StarConditionError` unless `star_filter` is an
    order filter containing the top that satisfies condition (*)."""
    order = semilattice.order
    members = star_filter.members
    if semilattice.top not in star_filter:
        raise StarConditionError((semilattice.top,))
    for a in members:
        outside = [x for x in np.flatnonzero(order[a]) if x not in star_filter]
        if outside:
            raise StarConditionError((a, int(outside[0])))
    join = semilattice.join
    for operator, a, b, s in itertools.product(
            monoid.elements, members, members, range(semilattice.size)):
        if join[operator(a), s] in star_filter \
                and join[operator(b), s] not in star_filter:
            raise StarConditionError((operator.name, a, b, s))


def star_filter_interval(semilattice, monoid, star_filter, congruences=None):
    """Interval of congruences whose top block is `star_filter`.

    ``φ`` is generated by the pairs ``(f(a) + s, f(b) + s)`` with ``a, b``
    in the filter; ``ψ`` relates ``x`` and ``y`` when ``f(x) + s`` and
    ``f(y) + s`` are together in or out of the filter for every ``f`` and
    ``s``. Both are verified, and the members are checked to be exactly the
    interval between them.

    Raises
    ------
    StarConditionError
        With witness ``(f, a, b, s)``.
    VerificationError
        If ``ψ`` is not a congruence or the members differ from the interval.
    """
    check_star_condition(semilattice, monoid, star_filter)
    join = semilattice.join
    members = star_filter.members
    size = semilattice.size
    generators = [
        (int(join[operator(a), s]), int(join[operator(b), s]))
        for operator, a, b, s in itertools.product(
            monoid.elements, members, members, range(size))]
    phi = congruence_closure(semilattice, monoid, generators)

    signatures = [
        tuple(int(join[operator(x), s]) in star_filter
              for operator in monoid.elements for s in range(size))
        for x in range(size)]
    psi = Congruence(canonical_partition(signatures))
    if not is_compatible(semilattice, monoid, psi.partition):
        raise VerificationError("psi is not a congruence")

    if congruences is None:
        congruences = congruence_lattice(semilattice, monoid).elements
    found = tuple(congruence for congruence in congruences
                  if top_block(congruence, semilattice) == star_filter)
    interval = tuple(congruence for congruence in congruences
                     if phi <= congruence <= psi)
    if set(found) != set(interval):
        raise VerificationError("members differ from [phi, psi]",
                                (phi.label(), psi.label()))
    return StarInterval(star_filter, phi, psi, found)
