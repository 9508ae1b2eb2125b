# -*- coding: utf-8 -*-
"""Satisfaction of quasi-identities in finite structures and enumeration of
small models of a presentation."""
import itertools

from ..exceptions import UninterpretedSymbolError
from ..types.presentation import Equation
from ..types.structure import FiniteStructure

#: Default largest carrier enumerated by :func:`enumerate_models`
MODEL_SIZE = 4


def evaluate(term, assignment, operations, constants):
    """Value of `term` under a variable `assignment`.

    Raises
    ------
    UninterpretedSymbolError
        If a function symbol or constant has no interpretation.
    """
    if term.variable is not None:
        value = assignment[term.variable]
    else:
        try:
            value = constants[term.base]
        except KeyError:
            raise UninterpretedSymbolError(term.base) from None
    for function in reversed(term.functions):
        try:
            value = operations[function][value]
        except KeyError:
            raise UninterpretedSymbolError(function) from None
    return value


def holds(atom, assignment, operations, constants, predicates):
    if isinstance(atom, Equation):
        return evaluate(atom.left, assignment, operations, constants) \
            == evaluate(atom.right, assignment, operations, constants)
    try:
        extension = predicates[atom.predicate]
    except KeyError:
        raise UninterpretedSymbolError(atom.predicate) from None
    return evaluate(atom.term, assignment, operations, constants) \
        in extension


def assignments(law, size):
    """Every map from the law's variables to ``range(size)``."""
    variables = sorted(law.variables)
    for values in itertools.product(range(size), repeat=len(variables)):
        yield dict(zip(variables, values))


def _satisfied(law, size, operations, constants, predicates):
    for assignment in assignments(law, size):
        if all(holds(atom, assignment, operations, constants, predicates)
               for atom in law.premises) \
                and not holds(law.conclusion, assignment, operations,
                              constants, predicates):
            return False
    return True


def satisfies(structure, law):
    """Whether every assignment making the premises of `law` true in
    `structure` also makes its conclusion true.

    Raises
    ------
    UninterpretedSymbolError
        If `law` uses a symbol `structure` does not interpret.
    """
    return _satisfied(law, structure.size, structure.operations,
                      structure.constants, structure.predicates)


def violated_law(structure, laws):
    """First law of `laws` that `structure` fails, or `None`."""
    return next((law for law in laws if not satisfies(structure, law)), None)


def enumerate_models(presentation, max_size=MODEL_SIZE):
    """All models of `presentation` with carrier size at most `max_size`.

    The first constant is pinned to element 0, so every model is listed up
    to an isomorphism fixing that constant; other constants, functions and
    predicates range over all interpretations. Laws are checked as soon as
    their symbols are interpreted."""
    if max_size < 1:
        raise ValueError("max_size must be positive")
    symbols = [('constant', name) for name in presentation.constants] \
        + [('function', name) for name in presentation.functions] \
        + [('predicate', name) for name in presentation.predicates]
    stages = [[] for _ in range(len(symbols) + 1)]
    for law in presentation.laws:
        predicates, functions, constants = law.symbols()
        used = {('predicate', name) for name in predicates} \
            | {('function', name) for name in functions} \
            | {('constant', name) for name in constants}
        stage = max((symbols.index(symbol) + 1 for symbol in used),
                    default=0)
        stages[stage].append(law)

    for size in range(1, max_size + 1):
        operations, constants, predicates = {}, {}, {}

        def choices(kind, position):
            if kind == 'constant':
                return [0] if position == 0 else range(size)
            if kind == 'function':
                return itertools.product(range(size), repeat=size)
            return (frozenset(itertools.compress(range(size), flags))
                    for flags in itertools.product((0, 1), repeat=size))

        def extend(position):
            if not all(_satisfied(law, size, operations, constants,
                                  predicates)
                       for law in stages[position]):
                return
            if position == len(symbols):
                yield FiniteStructure(size, operations, constants, predicates)
                return
            kind, name = symbols[position]
            target = {'constant': constants, 'function': operations,
                      'predicate': predicates}[kind]
            for value in choices(kind, position):
                target[name] = value
                yield from extend(position + 1)
            del target[name]

        yield from extend(0)
