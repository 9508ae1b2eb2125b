# -*- coding: utf-8 -*-
from .base import Type
from ..base import Property

#: Variable names; every other term base is a constant
VARIABLES = ('x', 'y', 'z')


class Term(Type):
    """Unary function symbols applied to a variable or constant.

    ``functions`` lists symbols outermost first, so ``f(g(x))`` is
    ``Term('x', ('f', 'g'))``."""

    base = Property(str, readonly=True, doc="Variable or constant name")
    functions = Property(tuple, default=(), readonly=True,
                         doc="Applied function symbols, outermost first")

    def __init__(self, base, functions=(), *args, **kwargs):
        super().__init__(base, tuple(functions), *args, **kwargs)

    @property
    def variable(self):
        return self.base if self.base in VARIABLES else None

    @property
    def depth(self):
        return len(self.functions)

    def apply(self, function):
        return Term(self.base, (function,) + self.functions)

    def substitute(self, variable, term):
        if self.base != variable:
            return self
        return Term(term.base, self.functions + term.functions)

    def sort_key(self):
        return (self.variable is None, self.depth, self.base, self.functions)

    def __eq__(self, other):
        return isinstance(other, Term) \
            and (self.base, self.functions) == (other.base, other.functions)

    def __hash__(self):
        return hash((self.base, self.functions))

    def __str__(self):
        text = self.base
        for function in reversed(self.functions):
            text = "{}({})".format(function, text)
        return text


class Atom(Type):
    """Atomic formula."""

    @property
    def terms(self):
        raise NotImplementedError

    @property
    def variables(self):
        return {term.variable for term in self.terms} - {None}

    def sort_key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.sort_key() == other.sort_key()

    def __hash__(self):
        return hash(self.sort_key())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


class Predication(Atom):
    """Unary predicate applied to a term, ``P(t)``."""

    predicate = Property(str, readonly=True)
    term = Property(Term, readonly=True)

    @property
    def terms(self):
        return (self.term,)

    def map_terms(self, function):
        return Predication(self.predicate, function(self.term))

    def sort_key(self):
        return (0, self.predicate, self.term.sort_key())

    def __str__(self):
        return "{}({})".format(self.predicate, self.term)


class Equation(Atom):
    """Equation ``s = t``, stored with the smaller term on the left."""

    left = Property(Term, readonly=True)
    right = Property(Term, readonly=True)

    def __init__(self, left, right, *args, **kwargs):
        if right.sort_key() < left.sort_key():
            left, right = right, left
        super().__init__(left, right, *args, **kwargs)

    @property
    def terms(self):
        return (self.left, self.right)

    @property
    def trivial(self):
        return self.left == self.right

    def map_terms(self, function):
        return Equation(function(self.left), function(self.right))

    def sort_key(self):
        return (1, self.left.sort_key(), self.right.sort_key())

    def __str__(self):
        return "{} = {}".format(self.left, self.right)


class QuasiIdentity(Type):
    """Implication from a conjunction of atoms to one atom.

    Premises are deduplicated and sorted, so equal laws compare equal."""

    premises = Property(tuple, readonly=True, doc="Premise atoms")
    conclusion = Property(Atom, readonly=True)

    def __init__(self, premises, conclusion, *args, **kwargs):
        super().__init__(tuple(sorted(set(premises))), conclusion,
                         *args, **kwargs)

    @property
    def atoms(self):
        return self.premises + (self.conclusion,)

    @property
    def variables(self):
        return set().union(*(atom.variables for atom in self.atoms))

    def symbols(self):
        """``(predicates, functions, constants)`` used by the law."""
        predicates, functions, constants = set(), set(), set()
        for atom in self.atoms:
            if isinstance(atom, Predication):
                predicates.add(atom.predicate)
            for term in atom.terms:
                functions.update(term.functions)
                if term.variable is None:
                    constants.add(term.base)
        return predicates, functions, constants

    def __eq__(self, other):
        return isinstance(other, QuasiIdentity) \
            and (self.premises, self.conclusion) \
            == (other.premises, other.conclusion)

    def __hash__(self):
        return hash((self.premises, self.conclusion))

    def __str__(self):
        if not self.premises:
            return str(self.conclusion)
        return "{} -> {}".format(
            " & ".join(str(atom) for atom in self.premises), self.conclusion)


class Presentation(Type):
    """Quasivariety axiom set over unary predicates and functions."""

    style = Property(str, doc="first, second, combined or fixture")
    predicates = Property(tuple, doc="Predicate symbols")
    functions = Property(tuple, default=(), doc="Unary function symbols")
    constants = Property(tuple, default=(), doc="Constant symbols")
    laws = Property(tuple, default=(), doc="Quasi-identities")
    comments = Property(tuple, default=(), doc="Header comment lines")
    aliases = Property(dict, default=None,
                       doc="Alternative predicate names accepted on input")

    def __init__(self, style, predicates, functions=(), constants=(),
                 laws=(), comments=(), aliases=None, *args, **kwargs):
        unique = []
        seen = set()
        for law in laws:
            if law not in seen:
                seen.add(law)
                unique.append(law)
        super().__init__(style, tuple(predicates), tuple(functions),
                         tuple(constants), tuple(unique), tuple(comments),
                         dict(aliases or {}), *args, **kwargs)
        for law in self.laws:
            predicates, functions, constants = law.symbols()
            undeclared = (predicates - set(self.predicates)) \
                | (functions - set(self.functions)) \
                | (constants - set(self.constants))
            if undeclared:
                raise ValueError("undeclared symbol {} in law {}".format(
                    sorted(undeclared)[0], law))

    @property
    def composition(self):
        """Term composition from laws ``f(g(x)) = h(x)``.

        Maps ``(f, g)`` to ``h``, read as ``f(g(x))`` rewriting to
        ``h(x)``; a law ``f(g(x)) = x`` maps ``(f, g)`` to the identity
        symbol."""
        identity = self.identity
        table = {}
        for law in self.laws:
            atom = law.conclusion
            if law.premises or not isinstance(atom, Equation):
                continue
            left, right = atom.left, atom.right
            if not left.variable or left.base != right.base \
                    or right.depth != 2:
                continue
            if left.depth == 1:
                table[right.functions] = left.functions[0]
            elif left.depth == 0 and identity is not None:
                table[right.functions] = identity
        return table

    @property
    def identity(self):
        """Function symbol ``i`` with law ``i(x) = x``, if present."""
        for law in self.laws:
            atom = law.conclusion
            if not law.premises and isinstance(atom, Equation) \
                    and atom.left.depth == 0 and atom.right.depth == 1 \
                    and atom.left.variable \
                    and atom.left.base == atom.right.base:
                return atom.right.functions[0]
        return None

    @property
    def constant(self):
        """The distinguished constant (``w`` or ``e``), if any."""
        return self.constants[0] if self.constants else None

    def __eq__(self, other):
        return isinstance(other, Presentation) and all(
            getattr(self, name) == getattr(other, name)
            for name in type(self).properties)

    def __hash__(self):
        return hash((self.style, self.laws))
