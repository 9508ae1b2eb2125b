# -*- coding: utf-8 -*-
"""Property suites run over exhaustive and seeded random instances.

Each suite is a declarative component whose :meth:`Suite.run` returns one
aggregated :class:`~.Report`: a check passes when it passed on every
instance, and its witness names the first failing instance.
"""
import logging
import time
from abc import abstractmethod

import numpy as np

from ..analysis.constructions import dual_leaf
from ..analysis.properties import lattice_properties
from ..base import Base, Property
from ..congruence.eon import EXHAUSTIVE_BOUND, eon_rule_check
from ..fixtures import COMBINED, INSTANCES, load_fixture
from ..generator.exhaustive import ExhaustiveGenerator, semilattices
from ..generator.random import RandomInstanceGenerator, random_quasi_identity
from ..presentation.emitter import present_combined
from ..types.report import Report
from .kcongruence import ORACLE_BOUND
from .model import MODEL_SIZE
from .pipeline import (
    verify_combined, verify_first, verify_lemma1, verify_pseudo_lemma,
    verify_pseudoprop, verify_reduction, verify_second, verify_star_filters)

logger = logging.getLogger(__name__)


def describe(semilattice, monoid=None):
    """Short instance description for witnesses."""
    rows = ";".join(",".join(str(value) for value in row)
                    for row in semilattice.join.tolist())
    text = "n={} join={}".format(semilattice.size, rows)
    if monoid is not None and not monoid.is_trivial:
        text += " ops=" + ",".join(
            "".join(str(image) for image in operator.images)
            for operator in monoid.elements[1:])
    return text


def aggregate(title, labelled_reports):
    """Combine ``(label, report)`` pairs into one report."""
    report = Report(title)
    checks = {}
    count = 0
    for label, instance in labelled_reports:
        count += 1
        for check in instance.checks:
            passed, witness = checks.get(check.name, (True, None))
            if passed and not check.passed:
                passed = False
                witness = "[{}] {}".format(label, check.witness or "").strip()
            checks[check.name] = passed, witness
        report.notes.extend(note for note in instance.notes
                            if note not in report.notes)
    report.values['instances'] = count
    for name, (passed, witness) in checks.items():
        report.add(name, passed, witness)
    return report


class Suite(Base):
    """Suite base class

    Runs a family of checks and aggregates them into a report."""
    title = "suite"

    @property
    def name(self):
        return type(self).__name__

    @abstractmethod
    def reports(self):
        """Generate ``(label, report)`` pairs, one per instance."""
        raise NotImplementedError

    def run(self):
        """Run the suite

        Returns
        -------
        : :class:`~.Report`
        """
        logger.info("running %s", self.name)
        start = time.perf_counter()
        report = aggregate(self.title, self.reports())
        logger.info("%s: %d instances in %.2fs", self.name,
                    report.values['instances'], time.perf_counter() - start)
        return report


class Lemma1Suite(Suite):
    """Congruences and eon relations agree on every small semilattice with
    the trivial monoid and on random single-generator monoids."""
    title = "lemma1 suite"

    max_size = Property(int, default=5, doc="Largest exhaustive carrier")
    random_count = Property(int, default=100, doc="Random instances")
    seed = Property(int, default=0)
    eon_bound = Property(int, default=EXHAUSTIVE_BOUND,
                         doc="Largest carrier cross-checked exhaustively")

    def reports(self):
        instances = list(ExhaustiveGenerator(self.max_size)) + list(
            RandomInstanceGenerator(self.random_count, self.seed,
                                    self.max_size))
        for semilattice, monoid in instances:
            yield describe(semilattice, monoid), verify_lemma1(
                semilattice, monoid, self.eon_bound)


class EonRulesSuite(Suite):
    """Ordering and join rules against brute-force eon closures."""
    title = "eon rules suite"

    max_size = Property(int, default=5)
    family_size = Property(int, default=2,
                           doc="Largest family of principal eon relations")

    def reports(self):
        for semilattice in semilattices(self.max_size):
            yield describe(semilattice), eon_rule_check(
                semilattice, None, self.family_size)


def _combined_instances(random_count, seed, max_size, fixtures=COMBINED):
    for name in fixtures:
        yield (name,) + load_fixture(name)
    generator = RandomInstanceGenerator(
        random_count, seed, max_size, kind='automorphism')
    for semilattice, monoid in generator:
        yield (describe(semilattice, monoid), semilattice, monoid)


class CombinedSuite(Suite):
    """Combined representation on the fixtures and random automorphism
    groups."""
    title = "combined suite"

    random_count = Property(int, default=25)
    seed = Property(int, default=0)
    max_size = Property(int, default=5)
    oracle_bound = Property(int, default=ORACLE_BOUND)
    fixtures = Property(tuple, default=('trivial',) + COMBINED,
                        doc="Named instances run before the random ones")

    def reports(self):
        for label, semilattice, monoid in _combined_instances(
                self.random_count, self.seed, self.max_size, self.fixtures):
            yield label, verify_combined(semilattice, monoid,
                                         self.oracle_bound)


class SecondRepresentationSuite(Suite):
    """Second (and optionally first) representation on every small
    semilattice."""
    title = "second representation suite"

    max_size = Property(int, default=5)
    include_first = Property(bool, default=True)
    oracle_bound = Property(int, default=ORACLE_BOUND)

    def reports(self):
        for semilattice in semilattices(self.max_size):
            label = describe(semilattice)
            yield label, verify_second(semilattice, self.oracle_bound)
            if self.include_first:
                yield label, verify_first(semilattice, self.oracle_bound)


class DualLeafSuite(Suite):
    """The dual leaf has twelve elements, is meet semidistributive and is not
    upper bounded."""
    title = "dual leaf suite"

    def reports(self):
        lattice = dual_leaf()
        properties = lattice_properties(lattice)
        report = Report("dual leaf", values={
            'size': lattice.size, 'sd_meet': properties.sd_meet,
            'upper_bounded': properties.upper_bounded})
        report.add('size', lattice.size == 12)
        report.add('sd_meet', properties.sd_meet)
        report.add('not_upper_bounded', not properties.upper_bounded)
        yield "dual-leaf", report


class ReductionSuite(Suite):
    """Random laws over a combined signature keep their models when reduced
    to one variable."""
    title = "reduction suite"

    count = Property(int, default=200, doc="Random laws")
    seed = Property(int, default=0)
    fixture = Property(str, default='s22-swap')
    model_size = Property(int, default=MODEL_SIZE)

    def reports(self):
        context = present_combined(*load_fixture(self.fixture))
        rng = np.random.default_rng(self.seed)
        laws = [random_quasi_identity(rng, context)
                for _ in range(self.count)]
        yield self.fixture, verify_reduction(context, laws, self.model_size)


class PseudoLemmaSuite(Suite):
    """Pseudo-one lemma and the generation of ``Υ`` on the combined
    instances."""
    title = "pseudo lemma suite"

    random_count = Property(int, default=25)
    seed = Property(int, default=0)
    max_size = Property(int, default=5)

    def reports(self):
        for label, semilattice, monoid in _combined_instances(
                self.random_count, self.seed, self.max_size):
            yield label, verify_pseudo_lemma(semilattice, monoid)


def _instance_fixtures():
    for name in INSTANCES:
        yield (name,) + load_fixture(name)


class StarFilterSuite(Suite):
    """Every top block satisfies condition (*) and bounds an interval that
    contains its congruence."""
    title = "star filter suite"

    def reports(self):
        for name, semilattice, monoid in _instance_fixtures():
            yield name, verify_star_filters(semilattice, monoid)


class PseudopropSuite(Suite):
    """The pseudo-one search succeeds on finite fixtures fixing the top."""
    title = "pseudoprop suite"

    def reports(self):
        for name, semilattice, monoid in _instance_fixtures():
            yield name, verify_pseudoprop(semilattice, monoid)


SUITES = {
    'lemma1': Lemma1Suite,
    'eon-rules': EonRulesSuite,
    'combined': CombinedSuite,
    'second': SecondRepresentationSuite,
    'dual-leaf': DualLeafSuite,
    'reduction': ReductionSuite,
    'pseudo-lemma': PseudoLemmaSuite,
    'star-filter': StarFilterSuite,
    'pseudoprop': PseudopropSuite,
}
