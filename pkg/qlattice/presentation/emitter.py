# -*- coding: utf-8 -*-
"""Quasivariety presentations of semilattices with operators.

Element ``s`` of the semilattice has predicate ``P_s``, the top has ``U``.
Function symbols are the names of the monoid elements, the identity being
``i``. A term ``f(g(x))`` denotes ``(g∘f)(x)``: symbols act as the opposite
monoid, so laws ``f(g(x)) = h(x)`` are emitted for ``h = g∘f``.
"""
import itertools
import warnings

from ..exceptions import MonoidPropertyError
from ..semilattice import minimal_covers
from ..types.presentation import (
    Term, Predication, Equation, QuasiIdentity, Presentation)

X, Y = Term('x'), Term('y')


def predicate_name(semilattice, element):
    if element == semilattice.top:
        return 'U'
    return 'P_{}'.format(element)


def _predicates(semilattice):
    return tuple(predicate_name(semilattice, s)
                 for s in semilattice.nonzero())


def _law(premises, conclusion):
    return QuasiIdentity(premises, conclusion)


def implication_laws(semilattice):
    """``A(x) -> B(x)`` whenever ``a > b``."""
    return [
        _law([Predication(predicate_name(semilattice, a), X)],
             Predication(predicate_name(semilattice, b), X))
        for a, b in itertools.product(semilattice.nonzero(), repeat=2)
        if a != b and semilattice.leq(b, a)]


def cover_laws(semilattice):
    """``&_i A_i(x) -> B(x)`` for the minimal antichains joining to ``b``."""
    return [
        _law([Predication(predicate_name(semilattice, a), X)
              for a in antichain],
             Predication(predicate_name(semilattice, join), X))
        for antichain, join in minimal_covers(semilattice)]


def order_laws(semilattice):
    return implication_laws(semilattice) + cover_laws(semilattice)


def present_first(semilattice):
    """Laws ``x = y``, order laws and join-cover laws."""
    laws = [_law([], Equation(X, Y))] + order_laws(semilattice)
    return Presentation('first', _predicates(semilattice), laws=laws)


def present_second(semilattice):
    """Constant ``e`` satisfying every predicate, ``U(x) -> x = e`` and the
    order and join-cover laws.

    On the one-element semilattice there are no predicates and the single
    law is ``x = e``."""
    e = Term('e')
    predicates = _predicates(semilattice)
    if not predicates:
        laws = [_law([], Equation(X, e))]
    else:
        laws = [_law([], Predication(name, e)) for name in predicates]
        laws.append(_law([Predication('U', X)], Equation(X, e)))
        laws.extend(order_laws(semilattice))
    return Presentation('second', predicates, constants=('e',), laws=laws,
                        aliases={'E': 'U'})


def _apply(monoid, index, term):
    """Apply the symbol of monoid element `index`, omitting the identity."""
    if index == 0:
        return term
    return term.apply(monoid.elements[index].name)


def representatives(semilattice, monoid, element):
    """Atoms ``A(f(x))`` with ``a != 0`` and ``f(a) = element``."""
    return [Predication(predicate_name(semilattice, a),
                        _apply(monoid, index, X))
            for a in semilattice.nonzero()
            for index, operator in enumerate(monoid.elements)
            if operator(a) == element]


def irredundant_covers(semilattice):
    """``(antichain, a)`` with ``a <= join(antichain)`` and no proper
    subset of the antichain above ``a``.

    Singletons ``(b,)`` come first, for every ``a <= b``; then the minimal
    join covers, each with the elements below its join that no smaller
    subset reaches."""
    nonzero = list(semilattice.nonzero())
    covers = [((b,), a) for a, b in itertools.product(nonzero, repeat=2)
              if semilattice.leq(a, b)]
    for antichain, join in minimal_covers(semilattice):
        subjoins = [semilattice.join_all(smaller) for smaller in
                    itertools.combinations(antichain, len(antichain) - 1)]
        covers.extend(
            (antichain, a) for a in nonzero
            if semilattice.leq(a, join)
            and not any(semilattice.leq(a, s) for s in subjoins))
    return covers


def representative_cover_laws(semilattice, monoid):
    """``&_j beta_j -> alpha`` for every irredundant cover
    ``a <= b_1 + ... + b_k``, with ``alpha`` in ``P(a)`` and each ``beta_j``
    in ``P(b_j)``.

    ``P(s)`` is :func:`representatives` of ``s``. Covers with a redundant
    member follow from these through the single-premise laws. Tautologies
    are skipped."""
    laws = []
    for antichain, a in irredundant_covers(semilattice):
        alphas = representatives(semilattice, monoid, a)
        for betas in itertools.product(*(
                representatives(semilattice, monoid, b) for b in antichain)):
            laws.extend(_law(betas, alpha) for alpha in alphas
                        if alpha not in betas)
    return laws


def present_combined(semilattice, monoid):
    """Presentation whose theory lattice is the congruence lattice of
    ``(S, +, 0, M)``.

    Requires `monoid` to be reductive, right cancellative and to fix the
    top. Cover laws come from :func:`representative_cover_laws`.

    Raises
    ------
    MonoidPropertyError
        Naming the first missing flag.
    """
    for flag in ('reductive', 'right_cancellative', 'fixes_top'):
        if not getattr(monoid.flags, flag):
            raise MonoidPropertyError(flag)
    w = Term('w')
    names = monoid.names
    size = len(monoid)
    laws = []
    # Constant
    laws.extend(_law([], Equation(w.apply(name), w)) for name in names)
    # Composition, identity first
    laws.append(_law([], Equation(X.apply(names[0]), X)))
    for f, g in itertools.product(range(1, size), repeat=2):
        h = monoid.compose(g, f)
        laws.append(_law([], Equation(
            X.apply(names[g]).apply(names[f]), _apply(monoid, h, X))))
    # Injectivity
    laws.extend(
        _law([Equation(X.apply(name), Y.apply(name))], Equation(X, Y))
        for name in names[1:])
    # Distinct functions only agree at w
    laws.extend(
        _law([Equation(_apply(monoid, f, X), _apply(monoid, g, X))],
             Equation(X, w))
        for f, g in itertools.combinations(range(size), 2))
    if semilattice.size == 1:
        laws.append(_law([], Equation(X, w)))
        return Presentation('combined', (), names, ('w',), laws)
    laws.append(_law([Predication('U', X)], Equation(X, w)))
    # Kernel atoms and facts at w
    laws.extend(_law([], atom)
                for atom in representatives(semilattice, monoid, 0))
    laws.extend(_law([], Predication(predicate_name(semilattice, a), w))
                for a in semilattice.nonzero())
    laws.extend(representative_cover_laws(semilattice, monoid))
    return Presentation('combined', _predicates(semilattice), names, ('w',),
                        laws)


def _power(name, k, term):
    for _ in range(k):
        term = term.apply(name)
    return term


def present_dual_near_leaf(k_bound=4):
    """Presentation of the dual near-leaf over predicates ``A, B, C, D``,
    functions ``f, g`` (mutually inverse) and constant ``e``.

    The schemata ``x = f^k(x) -> x = e`` and ``x = g^k(x) -> x = e`` hold
    for every ``k > 0``; only ``k <= k_bound`` are emitted and a header
    comment records the truncation."""
    if k_bound < 1:
        raise ValueError("k_bound must be positive")
    warnings.warn("dual near-leaf schemata truncated at k={}".format(k_bound),
                  UserWarning)
    e = Term('e')
    A, B, C, D = ('A', 'B', 'C', 'D')

    def atom(name, term=X):
        return Predication(name, term)

    laws = [
        _law([], Equation(X.apply('g').apply('f'), X)),
        _law([], Equation(X.apply('f').apply('g'), X))]
    laws.extend(_law([], atom(name, e)) for name in (A, B, C, D))
    laws.extend(_law([], Equation(e.apply(name), e)) for name in 'fg')
    laws.extend(_law([atom(upper)], atom(lower))
                for upper, lower in ((D, C), (C, B), (B, A)))
    laws.extend(_law([atom(upper)], atom(lower, X.apply('g')))
                for upper, lower in ((C, D), (B, C), (A, B)))
    laws.append(_law([atom(A), atom(C, X.apply('g'))], atom(B)))
    laws.append(_law([atom(B), atom(D, X.apply('g'))], atom(C)))
    for name in 'fg':
        laws.extend(
            _law([Equation(X, _power(name, k, X))], Equation(X, e))
            for k in range(1, k_bound + 1))
    comments = ("dual near-leaf",
                "schemata over k > 0 truncated at k={}".format(k_bound))
    return Presentation('fixture', (A, B, C, D), ('f', 'g'), ('e',), laws,
                        comments)
