# -*- coding: utf-8 -*-
"""End-to-end verification of the representations.

Each pipeline emits a presentation, builds its one-generated free
structure, enumerates the K-congruences, induces operators from the
endomorphisms and compares the resulting congruence lattice with the one
computed directly on the semilattice. Results are returned as
:class:`~.Report` objects; a failed check signals a bug.
"""
import itertools
import logging

from ..analysis.operators import (
    orbit_joins, pseudoprop_check, star_filter_interval, top_block)
from ..analysis.properties import is_isomorphic
from ..congruence.eon import (
    con_eon_isomorphism, eon_lattice, EXHAUSTIVE_BOUND)
from ..congruence.partition import all_congruences, congruence_lattice
from ..exceptions import (
    EndomorphismError, IsomorphismError, StarConditionError,
    VerificationError)
from ..monoid import monoid_closure, trivial_monoid
from ..presentation.emitter import (
    predicate_name, present_combined, present_first, present_second)
from ..presentation.reducer import reduce_to_one_variable
from ..semilattice import ideals, principal_ideal
from ..types.operator import Operator
from ..types.presentation import Equation, QuasiIdentity, Term
from ..types.report import Report
from ..types.structure import StructureCongruence
from .free import endomorphisms, free_structure, named_endomorphisms
from .kcongruence import (
    ORACLE_BOUND, induced_operator, k_congruences, principal, upsilon)
from .model import enumerate_models, satisfies, violated_law, MODEL_SIZE

logger = logging.getLogger(__name__)


def ideal_congruence(semilattice, monoid, structure, ideal):
    """The K-congruence attached to an ideal of the semilattice.

    A proper ideal ``I`` adds the facts ``A(f(x))`` with ``f(a) ∈ I`` to
    the structure's own and identifies nothing; the whole semilattice
    gives the universal pair."""
    size = structure.size
    if semilattice.top in ideal:
        return StructureCongruence(
            [0] * size, {(predicate, x) for predicate in structure.predicates
                         for x in range(size)})
    facts = {(predicate_name(semilattice, a), g)
             for a in semilattice.nonzero()
             for g, operator in enumerate(monoid.elements)
             if operator(a) in ideal}
    return StructureCongruence(range(size), structure.atoms() | facts)


def theory_lattice(semilattice):
    """``Con(T, ∨, 0, Ê)`` from the induced operators of `semilattice`."""
    base = semilattice.as_semilattice()
    monoid = monoid_closure(list(semilattice.operators.values()), base)
    return congruence_lattice(base, monoid)


def _endomorphism_check(report, semilattice, monoid, style, structure):
    try:
        maps = named_endomorphisms(semilattice, monoid, style, structure)
    except EndomorphismError as err:
        report.add('endomorphisms', False, str(err))
        return None
    report.add('endomorphisms', True)
    report.values['endomorphisms'] = len(maps)
    return maps


def _oracle_check(report, structure, presentation, congruences, bound):
    oracle = k_congruences(structure, presentation, 'exhaustive', bound)
    if oracle is None:
        report.notes.append("exhaustive oracle skipped above {} candidates"
                            .format(bound))
        return
    missing = set(oracle.elements) ^ set(congruences.elements)
    report.add('oracle', not missing,
               min((element.label(structure) for element in missing),
                   default=None))


def _free_pipeline(title, presentation, structure, semilattice, monoid,
                   style, oracle_bound):
    """Shared steps; returns the report, the K-congruences and the named
    endomorphisms (or `None` when they differ from the expected ones)."""
    report = Report(title)
    law = violated_law(structure, presentation.laws)
    report.add('free_model', law is None, str(law) if law else None)
    congruences = k_congruences(structure, presentation)
    logger.debug("%s: %d K-congruences", title, len(congruences))
    report.values['ideals'] = len(ideals(semilattice))
    report.values['k_congruences'] = len(congruences)
    _oracle_check(report, structure, presentation, congruences, oracle_bound)
    maps = _endomorphism_check(report, semilattice, monoid, style, structure)
    if maps is not None:
        try:
            congruences.operators = {
                endomorphism.name: induced_operator(endomorphism, congruences)
                for endomorphism in maps}
        except VerificationError as err:
            report.add('induced_operators', False, str(err))
            maps = None
    return report, congruences, maps


def verify_combined(semilattice, monoid=None, oracle_bound=ORACLE_BOUND):
    """Check the combined presentation of ``(S, +, 0, M)`` end to end.

    Checks, in order: the free structure is a model; every ideal gives a
    K-congruence (``claim1``); ideal inclusion matches congruence order
    (``claim2``); these are all the K-congruences (``claim3``); the
    endomorphisms are the known ones; ``ε̂_w`` sends every ideal congruence
    to the least one (``claim4``); ``ε̂_h`` sends the congruence of ``↓s``
    to that of ``↓h(s)`` (``claim5``); and ``Con(T, ∨, 0, Ê)`` is
    isomorphic to the congruence lattice of the semilattice.

    Raises
    ------
    MonoidPropertyError
        If the monoid does not meet the presentation's requirements.
    """
    if monoid is None:
        monoid = trivial_monoid(semilattice)
    presentation = present_combined(semilattice, monoid)
    structure = free_structure(semilattice, monoid, 'combined')
    report, congruences, maps = _free_pipeline(
        "combined", presentation, structure, semilattice, monoid, 'combined',
        oracle_bound)
    labels = semilattice.labels
    index = {element: position
             for position, element in enumerate(congruences.elements)}

    attached = {ideal: ideal_congruence(semilattice, monoid, structure, ideal)
                for ideal in ideals(semilattice)}
    outside = [ideal for ideal, congruence in attached.items()
               if congruence not in index]
    report.add('claim1', not outside,
               outside[0].label(labels) if outside else None)

    misordered = next(
        ((first, second) for first, second in itertools.product(
            attached, repeat=2)
         if (attached[first] <= attached[second]) != (first <= second)),
        None)
    report.add('claim2', misordered is None,
               "{} vs {}".format(misordered[0].label(labels),
                                 misordered[1].label(labels))
               if misordered else None)

    extra = [congruence for congruence in congruences.elements
             if congruence not in set(attached.values())]
    report.add('claim3', not extra and len(congruences) == len(attached),
               extra[0].label(structure) if extra else None)

    if maps is None or outside:
        report.notes.append("operator claims skipped")
        return report

    def at(element):
        return index[attached[principal_ideal(semilattice, element)]]

    constant = congruences.operators['w']
    failure = next((s for s in range(semilattice.size)
                    if constant(at(s)) != at(0)), None)
    report.add('claim4', failure is None,
               labels[failure] if failure is not None else None)

    failure = next(
        ((operator.name, s) for operator, s in itertools.product(
            monoid.elements, range(semilattice.size))
         if congruences.operators[operator.name](at(s))
         != at(operator(s))), None)
    report.add('claim5', failure is None,
               "{}({})".format(failure[0], labels[failure[1]])
               if failure else None)

    isomorphic = is_isomorphic(congruence_lattice(semilattice, monoid),
                               theory_lattice(congruences))
    report.add('isomorphism', isomorphic)
    return report


def _verify_eon_style(style, semilattice, oracle_bound):
    presentation = {'second': present_second,
                    'first': present_first}[style](semilattice)
    monoid = trivial_monoid(semilattice)
    structure = free_structure(semilattice, style=style)
    report, congruences, maps = _free_pipeline(
        style, presentation, structure, semilattice, monoid, style,
        oracle_bound)
    report.add('ideals',
               report.values['k_congruences'] == report.values['ideals'])
    if maps is None:
        report.notes.append("isomorphism skipped")
        return report
    report.add('isomorphism', is_isomorphic(
        eon_lattice(semilattice, monoid), theory_lattice(congruences)))
    return report


def verify_second(semilattice, oracle_bound=ORACLE_BOUND):
    """Second representation: constant ``e`` in every predicate.

    ``Con(T, ∨, 0, Ê)`` of the free structure must be isomorphic to the
    eon lattice of the semilattice without operators."""
    return _verify_eon_style('second', semilattice, oracle_bound)


def verify_first(semilattice, oracle_bound=ORACLE_BOUND):
    """First representation: law ``x = y`` and a one-element free
    structure."""
    return _verify_eon_style('first', semilattice, oracle_bound)


def verify_lemma1(semilattice, monoid=None, eon_bound=EXHAUSTIVE_BOUND):
    """Congruence and eon lattices have equal size and ``θ ↦ θ ∩ ≤`` is an
    order-isomorphism; both are compared with brute-force oracles on
    carriers within `eon_bound`."""
    congruences = congruence_lattice(semilattice, monoid)
    eons = eon_lattice(semilattice, monoid, 'closure')
    report = Report("lemma1", values={'congruences': congruences.size,
                                      'eons': eons.size})
    report.add('sizes', congruences.size == eons.size,
               "{}!={}".format(congruences.size, eons.size)
               if congruences.size != eons.size else None)
    try:
        con_eon_isomorphism(semilattice, monoid, congruences, eons)
    except IsomorphismError as err:
        report.add('isomorphism', False, str(err))
    else:
        report.add('isomorphism', True)
    if semilattice.size <= eon_bound:
        exhaustive = eon_lattice(semilattice, monoid, 'exhaustive', eon_bound)
        report.add('oracle',
                   set(all_congruences(semilattice, monoid))
                   == set(congruences.elements)
                   and set(exhaustive.elements) == set(eons.elements))
    return report


def _unit_join(semilattice, indices):
    result = semilattice.zero
    for index in indices:
        result = semilattice.join[result, index]
    return int(result)


def pseudo_lemma_check(structure, laws, congruences=None, maps=None):
    """``ε̂(θ) ∨ Υ = θ ∨ Υ`` for every K-congruence ``θ`` and endomorphism
    ``ε``.

    Also checks that ``Υ`` is the greatest K-congruence and, when the
    structure has a constant ``c``, that ``Υ = ⋁_ε ε̂(con(x, c))``.

    Parameters
    ----------
    congruences : CompactConSemilattice, optional
        Computed with :func:`k_congruences` when absent.
    maps : list of Operator, optional
        Endomorphisms; all of them are enumerated when absent.
    """
    if congruences is None:
        congruences = k_congruences(structure, laws)
    if maps is None:
        maps = [Operator(endomorphism.images, "e{}".format(number))
                for number, endomorphism in enumerate(
                    endomorphisms(structure))]
    operators = {endomorphism.name: induced_operator(endomorphism,
                                                     congruences)
                 for endomorphism in maps}
    report = Report("pseudo lemma")
    top = upsilon(structure, laws)
    ups = congruences.index(top)
    join = congruences.join
    report.values['upsilon'] = top.label(structure)
    report.add('upsilon_top', ups == _unit_join(
        congruences, range(len(congruences))))

    failure = next(
        ((theta, name) for theta in range(len(congruences))
         for name, operator in operators.items()
         if join[operator(theta), ups] != join[theta, ups]), None)
    report.add('lemma', failure is None,
               "{} under {}".format(
                   congruences.elements[failure[0]].label(structure),
                   failure[1]) if failure else None)

    if structure.constants:
        constant = next(iter(structure.constants.values()))
        kappa = principal(congruences, [(0, constant)])
        generated = _unit_join(
            congruences, (operator(kappa) for operator in operators.values()))
        report.add('upsilon_generated', generated == ups)
    return report


def _kernel_laws(context):
    """``f(x) = w -> x = w`` and its converse for every function symbol."""
    x, w = Term('x'), Term(context.constant)
    laws = []
    for name in context.functions:
        laws.append(QuasiIdentity([Equation(x.apply(name), w)],
                                  Equation(x, w)))
        laws.append(QuasiIdentity([Equation(x, w)],
                                  Equation(x.apply(name), w)))
    return laws


def verify_reduction(context, laws, max_size=MODEL_SIZE,
                     reducer=reduce_to_one_variable):
    """Compare each law with its one-variable reduction on every model of
    `context` with at most `max_size` elements.

    `reducer` maps ``(law, context)`` to the list of reduced laws.

    Raises
    ------
    ReductionError
        If a law cannot be read in `context`.
    """
    models = list(enumerate_models(context, max_size))
    laws = list(laws)
    logger.debug("reduction: %d laws over %d models", len(laws), len(models))
    report = Report("reduction", values={'laws': len(laws),
                                         'models': len(models)})
    wide, different = None, None
    for law in laws:
        reduced = reducer(law, context)
        if wide is None and any(len(item.variables) > 1 for item in reduced):
            wide = law
        if different is None and any(
                satisfies(model, law)
                != all(satisfies(model, item) for item in reduced)
                for model in models):
            different = law
    report.add('one_variable', wide is None, str(wide) if wide else None)
    report.add('equivalence', different is None,
               str(different) if different else None)
    if context.style == 'combined':
        kernel = next(
            (law for law in _kernel_laws(context) for model in models
             if not satisfies(model, law)), None)
        report.add('kernel', kernel is None, str(kernel) if kernel else None)
    return report


def verify_star_filters(semilattice, monoid=None):
    """Every top block satisfies condition (*) and bounds an interval of
    congruences containing its congruence."""
    if monoid is None:
        monoid = trivial_monoid(semilattice)
    lattice = congruence_lattice(semilattice, monoid)
    report = Report("star filter", values={'congruences': lattice.size})
    failure = None
    for congruence in lattice.elements:
        star_filter = top_block(congruence, semilattice)
        label = congruence.label(semilattice.labels)
        try:
            interval = star_filter_interval(
                semilattice, monoid, star_filter, lattice.elements)
        except (StarConditionError, VerificationError) as err:
            failure = "{}: {}".format(label, err)
            break
        if congruence not in interval.members:
            failure = "{}: outside its interval".format(label)
            break
    report.add('star_interval', failure is None, failure)
    return report


def verify_pseudoprop(semilattice, monoid=None):
    """Pseudo-one search; on monoids fixing the top, ``k = top`` must
    equalise. The report carries the note on the infinite counterexample."""
    if monoid is None:
        monoid = trivial_monoid(semilattice)
    result = pseudoprop_check(semilattice, monoid)
    element = None if result.element is None \
        else semilattice.labels[result.element]
    report = Report("pseudoprop", values={'k': element,
                                          'fixes_top': monoid.fixes_top})
    if monoid.fixes_top:
        top = semilattice.top
        report.add('pseudoprop', result.passed)
        report.add('top_equalises',
                   top in orbit_joins(semilattice, monoid, top))
    report.add('infinite_note', 'infinite' in (result.note or ''))
    report.notes.append(result.note)
    return report


def verify_pseudo_lemma(semilattice, monoid=None):
    """:func:`pseudo_lemma_check` on the free structure of the combined
    presentation, with its named endomorphisms."""
    if monoid is None:
        monoid = trivial_monoid(semilattice)
    presentation = present_combined(semilattice, monoid)
    structure = free_structure(semilattice, monoid)
    maps = named_endomorphisms(semilattice, monoid, structure=structure)
    return pseudo_lemma_check(structure, presentation, maps=maps)
