# -*- coding: utf-8 -*-
"""Rewriting quasi-identities into equivalent laws in at most one variable.

The rewriting is valid modulo the laws of a second-style or combined
presentation: the constant satisfies every predicate, function symbols
compose by the presentation's table, are injective and fix ``w``, and
``f(x) = w`` holds exactly when ``x = w``. The monoid being reductive,
every equation ``f(u) = g(v)`` reduces to ``h(u) = v`` or ``u = h(v)``.
"""
from ..exceptions import ReductionError
from ..types.presentation import Term, Equation, QuasiIdentity


class _Rewriter:
    def __init__(self, context):
        self.combined = context.style == 'combined'
        self.constant = context.constant
        self.composition = context.composition
        self.identity = context.identity
        self.functions = [name for name in context.functions
                          if name != self.identity]

    def term(self, term):
        functions = [name for name in term.functions if name != self.identity]
        if self.combined and term.variable is None:
            functions = []
        while len(functions) >= 2:
            composite = self.composition.get(tuple(functions[-2:]))
            if composite is None:
                break
            functions[-2:] = [] if composite == self.identity \
                else [composite]
        return Term(term.base, functions)

    def atom(self, atom):
        atom = atom.map_terms(self.term)
        if not isinstance(atom, Equation) or atom.trivial:
            return atom
        left, right = atom.left, atom.right
        if self.combined and right.variable is None:
            # f(v) = w iff v = w
            return Equation(Term(left.base), right)
        if left.variable is None or left.depth == 0 or right.depth == 0:
            return atom
        f, g = left.functions[0], right.functions[0]
        u, v = Term(left.base), Term(right.base)
        if f == g:
            return Equation(u, v)
        for h in self.functions:
            if self.composition.get((g, h)) == f:
                return Equation(u.apply(h), v)
            if self.composition.get((f, h)) == g:
                return Equation(u, v.apply(h))
        return atom

    def law(self, premises, conclusion):
        """Normalised law, or `None` for a tautology."""
        premises = {self.atom(atom) for atom in premises}
        premises = {atom for atom in premises
                    if not (isinstance(atom, Equation) and atom.trivial)}
        conclusion = self.atom(conclusion)
        if (isinstance(conclusion, Equation) and conclusion.trivial) \
                or conclusion in premises:
            return None
        return premises, conclusion

    @staticmethod
    def substitute(atoms, variable, term):
        return {atom.map_terms(lambda t: t.substitute(variable, term))
                for atom in atoms}


def normalise(law, context):
    """Normalise terms and equations of `law`; `None` if it is trivial."""
    rewriter = _Rewriter(context)
    normalised = rewriter.law(law.premises, law.conclusion)
    if normalised is None:
        return None
    return QuasiIdentity(*normalised)


def _eliminable(atom):
    """``(variable, term)`` for a premise defining a variable, else None."""
    if not isinstance(atom, Equation):
        return None
    left, right = atom.left, atom.right
    if left.depth == 0 and left.variable and left.base != right.base:
        if right.depth == 0 and right.variable:
            # eliminate the later variable name
            first, second = sorted((left.base, right.base))
            return second, Term(first)
        return left.base, right
    return None


def reduce_to_one_variable(law, context):
    """Equivalent laws each using at most one variable.

    Parameters
    ----------
    law : QuasiIdentity
    context : Presentation
        Second-style or combined presentation the law is read in.

    Returns
    -------
    : list of QuasiIdentity
        Empty when the law is a consequence of the context alone.

    Raises
    ------
    ReductionError
        If the law uses symbols the context does not declare, or the
        context style does not support the rewriting.
    """
    if context.style not in ('second', 'combined'):
        raise ReductionError("not reducible: {} presentation".format(
            context.style))
    predicates, functions, constants = law.symbols()
    undeclared = (predicates - set(context.predicates)
                  - set(context.aliases)) \
        | (functions - set(context.functions)) \
        | (constants - set(context.constants))
    if undeclared:
        raise ReductionError("not reducible: undeclared symbol {}".format(
            sorted(undeclared)[0]))
    law = _resolve_aliases(law, context)

    rewriter = _Rewriter(context)
    normalised = rewriter.law(law.premises, law.conclusion)
    if normalised is None:
        return []
    premises, conclusion = normalised

    # Substitute away variables defined by equational premises
    while True:
        definition = next(
            ((atom, _eliminable(atom)) for atom in sorted(premises)
             if _eliminable(atom)), None)
        if definition is None:
            break
        atom, (variable, term) = definition
        remaining = rewriter.substitute(premises - {atom}, variable, term)
        conclusion, = rewriter.substitute({conclusion}, variable, term)
        normalised = rewriter.law(remaining, conclusion)
        if normalised is None:
            return []
        premises, conclusion = normalised

    constant = Term(context.constant)
    reduced = []
    for kept in sorted(conclusion.variables):
        current = (premises, conclusion)
        others = QuasiIdentity(premises, conclusion).variables - {kept}
        for variable in sorted(others):
            substituted, = rewriter.substitute({current[1]}, variable,
                                               constant)
            current = rewriter.law(
                rewriter.substitute(current[0], variable, constant),
                substituted)
            if current is None:
                break
        if current is None:
            continue
        # constant-only premises hold in every model of the context
        result = QuasiIdentity(
            [atom for atom in current[0] if atom.variables], current[1])
        if result not in reduced:
            reduced.append(result)
    return reduced


def _resolve_aliases(law, context):
    if not context.aliases:
        return law

    def resolve(atom):
        predicate = getattr(atom, 'predicate', None)
        if predicate in context.aliases:
            return type(atom)(context.aliases[predicate], atom.term)
        return atom
    return QuasiIdentity([resolve(atom) for atom in law.premises],
                         resolve(law.conclusion))
