# -*- coding: utf-8 -*-
"""Command line front end.

Every run writes a seed-stamped header line, then the results in a fixed
order. Exit status is 0 on success, 1 when a ``CHECK`` line fails and 2 on
input errors."""
import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .analysis.operators import (
    INFINITE_NOTE, cofinal_compact_check, pseudoprop_check)
from .analysis.properties import lattice_properties
from .config import EON_MODES, OUTPUT_FORMATS, RunConfig, \
    YAMLConfigurationFile
from .congruence.eon import eon_lattice, eon_rule_check, equational_elements
from .congruence.partition import congruence_lattice
from .exceptions import ParseError, QLatticeError
from .fixtures import NAMES, load_fixture
from .presentation.emitter import (
    present_combined, present_first, present_second)
from .presentation.text import GRAMMAR as PRESENTATION_GRAMMAR
from .reader.presentation import LawReader, PresentationReader
from .reader.semilattice import GRAMMAR as SEMILATTICE_GRAMMAR, \
    SemilatticeReader
from .semilattice import generator, ideals
from .types.lattice import FiniteLattice
from .types.report import Report
from .verifier.pipeline import (
    verify_combined, verify_first, verify_lemma1, verify_pseudo_lemma,
    verify_pseudoprop, verify_reduction, verify_second, verify_star_filters)
from .verifier.suites import SUITES
from .writer.dot import DotWriter
from .writer.text import LatticeWriter, PresentationWriter, ReportWriter

logger = logging.getLogger(__name__)

PRESENT_TARGETS = ('first', 'second', 'combined', 'dual-near-leaf')
VERIFY_TARGETS = ('combined', 'second', 'first', 'lemma1', 'eon-rules',
                  'pseudo-lemma', 'star-filter', 'pseudoprop', 'reduce')

_EXAMPLES = {
    'con': "example:\n  qlattice con fixtures/s22_swap.slat",
    'eon': "example:\n  qlattice eon --fixture chain3 --mode closure",
    'analyze': "example:\n  qlattice analyze --fixture dual-leaf",
    'ideals': "example:\n  qlattice ideals fixtures/chain3.slat",
    'present': "example:\n  qlattice present combined "
               "fixtures/s22_swap.slat",
    'verify': "example:\n  qlattice verify combined fixtures/s22_swap.slat\n"
              "  qlattice verify reduce fixtures/s22_swap.qv "
              "fixtures/s22_swap.laws",
    'sweep': "example:\n  qlattice sweep --suite lemma1 --instances 10 "
             "--seed 3",
    'export-dot': "example:\n  qlattice export-dot fixtures/s22.slat",
}


class _Parser(argparse.ArgumentParser):
    """Argument parser printing the input grammars on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("{}: error: {}\n\n{}\n\n{}\n".format(
            self.prog, message, SEMILATTICE_GRAMMAR, PRESENTATION_GRAMMAR))
        sys.exit(2)


def _options():
    """Options shared by every subcommand.

    Defaults are `None` so only explicit flags override a ``--config``
    file."""
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument('--fixture', metavar='NAME',
                         help="built-in instance: {}; omega-truncation "
                              "takes a size as omega-truncation:N".format(
                                  ", ".join(NAMES)))
    options.add_argument('--config', type=Path, metavar='FILE',
                         help="YAML RunConfig; flags override its values")
    options.add_argument('--seed', type=int, help="seed (default 0)")
    options.add_argument('--format', dest='output_format',
                         choices=OUTPUT_FORMATS, help="lattice output format")
    options.add_argument('--closure-bound', type=int,
                         help="largest operator monoid")
    options.add_argument('--eon-bound', dest='eon_exhaustive_bound', type=int,
                         help="largest carrier for exhaustive eon scans")
    options.add_argument('--model-size', type=int,
                         help="largest model for law equivalence checks")
    options.add_argument('--schema-bound', type=int,
                         help="truncation of the dual near-leaf schemata")
    options.add_argument('-v', '--verbose', action='count', default=0,
                         help="log progress to stderr (repeat for debug)")
    return options


def build_parser():
    options = _options()
    parser = _Parser(
        prog='qlattice',
        description="Congruence lattices of semilattices with operators and "
                    "their representation as lattices of quasi-equational "
                    "theories.")
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    def add(name, help):
        return subparsers.add_parser(
            name, help=help, parents=[options], epilog=_EXAMPLES[name],
            formatter_class=argparse.RawDescriptionHelpFormatter)

    for name, help in (
            ('con', "congruence lattice of (S, M)"),
            ('ideals', "ideals of S with their generators"),
            ('export-dot', "Hasse diagram of the congruence lattice")):
        add(name, help).add_argument('input', nargs='?', type=Path)

    eon = add('eon', "eon relation lattice and its equational elements")
    eon.add_argument('input', nargs='?', type=Path)
    eon.add_argument('--mode', dest='eon_mode', choices=EON_MODES)

    analyze = add('analyze', "monoid flags and congruence lattice properties")
    analyze.add_argument('input', nargs='?', type=Path)
    analyze.add_argument('--dot', dest='output_format', action='store_const',
                         const='dot', help="emit the Hasse diagram instead")

    present = add('present', "emit a quasivariety presentation")
    present.add_argument('target', choices=PRESENT_TARGETS)
    present.add_argument('input', nargs='?', type=Path)

    verify = add('verify', "run a verification pipeline")
    verify.add_argument('target', choices=VERIFY_TARGETS)
    verify.add_argument('input', nargs='?', type=Path,
                        help="semilattice file, or presentation for reduce")
    verify.add_argument('extra', nargs='?', type=Path,
                        help="laws file for reduce")

    sweep = add('sweep', "randomised and exhaustive property suites")
    sweep.add_argument('--suite', dest='suites', action='append',
                       choices=sorted(SUITES),
                       help="suite to run (repeatable; default all)")
    sweep.add_argument('--instances', type=int,
                       help="random instance count per suite")
    return parser


def _config(arguments):
    """Merge ``--config`` values with explicit flags."""
    values = {}
    if arguments.config is not None:
        with arguments.config.open() as stream:
            loaded = YAMLConfigurationFile().load(stream)
        values.update((name, getattr(loaded, name))
                      for name in type(loaded).properties)
    for name in RunConfig.properties:
        value = getattr(arguments, name, None)
        if value is not None:
            values[name] = value
    return RunConfig(**values)


def _header(config):
    words = ["qlattice", config.command]
    if config.target is not None:
        words.append(config.target)
    words.append("seed={}".format(config.seed))
    return " ".join(words)


def _comment(config, text):
    prefix = "//" if config.output_format == 'dot' else "#"
    return "{} {}".format(prefix, text)


def _instances(config):
    """``(semilattice, monoid)`` pairs from the input file or fixture."""
    if config.input is not None:
        with SemilatticeReader(config.input,
                               closure_bound=config.closure_bound) as reader:
            instances = list(reader)
        if not instances:
            raise ParseError("no semilattice block", 1, 1)
        return instances
    if config.fixture is None:
        raise ValueError("no input: give a semilattice file or --fixture")
    return [_fixture_instance(config)]


def _fixture_instance(config):
    fixture = load_fixture(config.fixture, config.schema_bound)
    if not isinstance(fixture, tuple):
        raise ValueError("fixture {!r} is not a semilattice instance".format(
            config.fixture))
    return fixture


def _lattice_writer(config):
    if config.output_format == 'dot':
        return DotWriter()
    return LatticeWriter(config.output_format)


class _Run:
    """One dispatched command writing to `stream`."""

    def __init__(self, config, stream):
        self.config = config
        self.stream = stream
        self.passed = True

    def line(self, text):
        self.stream.write(text + "\n")

    def write(self, writer, item):
        writer.write(item, self.stream)

    def report(self, report):
        self.passed &= report.passed
        self.write(ReportWriter(), report)

    def each_instance(self, action):
        instances = _instances(self.config)
        for number, (semilattice, monoid) in enumerate(instances, 1):
            if len(instances) > 1:
                self.line(_comment(self.config, "instance {}".format(number)))
            logger.info("instance %d: %d elements, %d operators", number,
                        semilattice.size, len(monoid))
            action(semilattice, monoid)

    def con(self, semilattice, monoid):
        self.write(_lattice_writer(self.config),
                   congruence_lattice(semilattice, monoid))

    def export_dot(self, semilattice, monoid):
        self.write(DotWriter(), congruence_lattice(semilattice, monoid))

    def eon(self, semilattice, monoid):
        lattice = eon_lattice(semilattice, monoid, self.config.eon_mode,
                              self.config.eon_exhaustive_bound)
        self.write(_lattice_writer(self.config), lattice)
        if self.config.output_format == 'dot':
            return
        labels = semilattice.labels
        for ideal, relation in equational_elements(semilattice, monoid):
            self.line("equational {} {}".format(
                ideal.label(labels), relation.label(labels)))

    def ideals(self, semilattice, monoid):
        found = ideals(semilattice)
        labels = semilattice.labels
        self.line("ideals={}".format(len(found)))
        for ideal in found:
            self.line("ideal {} generator {}".format(
                ideal.label(labels), labels[generator(semilattice, ideal)]))

    def analyze(self, semilattice, monoid):
        lattice = congruence_lattice(semilattice, monoid)
        if self.config.output_format == 'dot':
            self.write(DotWriter(), lattice)
            return
        report = Report("analyze", values={
            'size': semilattice.size, 'monoid_size': len(monoid)})
        report.values.update(monoid.flags.items())
        report.values['congruences'] = lattice.size
        report.values.update(lattice_properties(lattice).items())
        result = pseudoprop_check(semilattice, monoid)
        report.values['pseudoprop_k'] = None if result.element is None \
            else semilattice.labels[result.element]
        cofinal = cofinal_compact_check(semilattice, monoid)
        report.values.update(cofinal.values)
        report.values.update(
            (check.name, check.passed) for check in cofinal.checks)
        if not monoid.flags.fixes_top:
            report.notes.append(INFINITE_NOTE)
        self.write(ReportWriter(), report)

    def fixture_lattice(self):
        """The fixture when it is a lattice rather than an instance."""
        config = self.config
        if config.input is not None or config.fixture is None:
            return None
        fixture = load_fixture(config.fixture, config.schema_bound)
        return fixture if isinstance(fixture, FiniteLattice) else None

    def analyze_lattice(self, lattice):
        if self.config.output_format == 'dot':
            self.write(DotWriter(), lattice)
            return
        report = Report("analyze", values={'size': lattice.size})
        report.values.update(lattice_properties(lattice).items())
        self.write(ReportWriter(), report)

    def present(self, semilattice, monoid):
        target = self.config.target
        if target == 'first':
            presentation = present_first(semilattice)
        elif target == 'second':
            presentation = present_second(semilattice)
        else:
            presentation = present_combined(semilattice, monoid)
        self.write(PresentationWriter(), presentation)

    def verify(self, semilattice, monoid):
        target = self.config.target
        if target == 'combined':
            report = verify_combined(semilattice, monoid)
        elif target == 'second':
            report = verify_second(semilattice)
        elif target == 'first':
            report = verify_first(semilattice)
        elif target == 'lemma1':
            report = verify_lemma1(semilattice, monoid,
                                   self.config.eon_exhaustive_bound)
        elif target == 'eon-rules':
            report = eon_rule_check(semilattice, monoid)
        elif target == 'pseudo-lemma':
            report = verify_pseudo_lemma(semilattice, monoid)
        elif target == 'star-filter':
            report = verify_star_filters(semilattice, monoid)
        else:
            report = verify_pseudoprop(semilattice, monoid)
        self.report(report)

    def reduce(self):
        config = self.config
        if config.fixture is not None:
            # the positional input is the laws file here
            context = present_combined(*_fixture_instance(config))
            path = config.extra or config.input
        else:
            if config.input is None:
                raise ValueError("verify reduce needs a presentation file")
            with PresentationReader(config.input) as reader:
                context = reader.read()
            path = config.extra
        if path is None:
            raise ValueError("verify reduce needs a laws file")
        with LawReader(path, context=context) as reader:
            laws = list(reader)
        self.report(verify_reduction(context, laws, config.model_size))

    def sweep(self):
        config = self.config
        for key in config.suites or sorted(SUITES):
            suite_class = SUITES[key]
            properties = suite_class.properties
            kwargs = {}
            if 'seed' in properties:
                kwargs['seed'] = config.seed
            if config.instances is not None:
                for name in ('random_count', 'count'):
                    if name in properties:
                        kwargs[name] = config.instances
            if 'model_size' in properties:
                kwargs['model_size'] = config.model_size
            if 'eon_bound' in properties:
                kwargs['eon_bound'] = config.eon_exhaustive_bound
            self.line("suite={}".format(key))
            self.report(suite_class(**kwargs).run())

    def __call__(self):
        config = self.config
        self.line(_comment(config, _header(config)))
        command = config.command
        if command == 'sweep':
            self.sweep()
        elif command == 'verify' and config.target == 'reduce':
            self.reduce()
        elif command == 'present' and config.target == 'dual-near-leaf':
            self.write(PresentationWriter(), load_fixture(
                'dual-near-leaf', config.schema_bound))
        elif command == 'analyze' and self.fixture_lattice() is not None:
            self.analyze_lattice(self.fixture_lattice())
        else:
            actions = {
                'con': self.con, 'eon': self.eon, 'ideals': self.ideals,
                'analyze': self.analyze, 'present': self.present,
                'verify': self.verify, 'export-dot': self.export_dot}
            if command not in actions:
                raise ValueError("unknown command {!r}".format(command))
            self.each_instance(actions[command])
        return 0 if self.passed else 1


def run(config, stream=None):
    """Dispatch `config` and write its output.

    Parameters
    ----------
    config : RunConfig
    stream : file-like, optional
        Output stream; standard output by default.

    Returns
    -------
    : int
        Exit status: 0 on success, 1 when a check fails, 2 on an input
        error.
    """
    if stream is None:
        stream = sys.stdout
    try:
        return _Run(config, stream)()
    except ParseError as err:
        sys.stderr.write("qlattice: error: {}\n\n{}\n\n{}\n".format(
            err, SEMILATTICE_GRAMMAR, PRESENTATION_GRAMMAR))
    except (QLatticeError, OSError, ValueError) as err:
        sys.stderr.write("qlattice: error: {}\n".format(err))
    return 2


def main(argv=None):
    parser = build_parser()
    arguments = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(
        arguments.verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = _config(arguments)
    except (OSError, ValueError) as err:
        sys.stderr.write("qlattice: error: {}\n".format(err))
        return 2
    return run(config)
