# -*- coding: utf-8 -*-
"""Plain-text form of presentations.

One declaration or law per line; ``#`` starts a comment::

    style combined
    pred P_1 P_2 U
    fun i s
    const w
    s(w) = w
    U(x) -> x = w
    P_1(x) & P_2(x) -> U(x)

Atoms are ``P(term)`` or ``term = term``; terms are a variable (``x``,
``y``, ``z``), a constant, or ``name(term)``. Premises are joined by ``&``
and followed by ``->``; a line without ``->`` is a premise-free law.
"""
import re

from ..exceptions import ParseError
from ..types.presentation import (
    Term, Predication, Equation, QuasiIdentity, Presentation)

GRAMMAR = """\
presentation file:
  style <first|second|combined|fixture>
  pred <name>...          predicate symbols
  fun <name>...           unary function symbols (optional)
  const <name>...         constants (optional)
  <law>                   one per line; '#' starts a comment
law:  [<atom> & <atom> ... ->] <atom>
atom: <pred>(<term>) | <term> = <term>
term: x | y | z | <const> | <fun>(<term>)"""

_TOKEN = re.compile(r"\s*(?:(->)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_DECLARATIONS = ('pred', 'fun', 'const')


def _tokenize(text, line):
    tokens = []
    position = 0
    while True:
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position \
                or not text[position:].strip():
            break
        value = match.group(match.lastindex)
        column = match.start(match.lastindex) + 1
        kind = 'name' if match.lastindex == 2 else value
        tokens.append((kind, value, column))
        position = match.end()
    return tokens


class _LawParser:
    def __init__(self, text, line, predicates=None, aliases=None):
        self.text = text
        self.line = line
        self.tokens = _tokenize(text, line)
        self.position = 0
        self.predicates = predicates
        self.aliases = aliases or {}

    def error(self, message, column=None):
        if column is None:
            column = self.peek()[2] if self.peek() else len(self.text) + 1
        raise ParseError(message, self.line, column)

    def peek(self):
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def take(self, kind=None):
        token = self.peek()
        if token is None:
            self.error("unexpected end of line")
        if kind is not None and token[0] != kind:
            self.error("expected {!r}".format(kind))
        self.position += 1
        return token

    def term(self):
        kind, name, column = self.take('name')
        token = self.peek()
        if token is None or token[0] != '(':
            return Term(name)
        opening = self.take('(')
        if self.peek() is None:
            self.error("unclosed '('", opening[2])
        inner = self.term()
        if self.peek() is None or self.peek()[0] != ')':
            self.error("unclosed '('", opening[2])
        self.take(')')
        return inner.apply(name)

    def atom(self):
        start = self.position
        term = self.term()
        token = self.peek()
        if token is not None and token[0] == '=':
            self.take('=')
            return Equation(term, self.term())
        if term.depth == 0:
            self.error("expected '=' after term", self.tokens[start][2])
        name = term.functions[0]
        name = self.aliases.get(name, name)
        if self.predicates is not None and name not in self.predicates:
            self.error("unknown predicate {!r}".format(name),
                       self.tokens[start][2])
        return Predication(name, Term(term.base, term.functions[1:]))

    def law(self):
        atoms = [self.atom()]
        premises = []
        while self.peek() is not None:
            kind = self.peek()[0]
            if kind == '&':
                self.take('&')
                atoms.append(self.atom())
            elif kind == '->':
                self.take('->')
                premises = atoms
                atoms = [self.atom()]
                if self.peek() is not None:
                    self.error("unexpected text after conclusion")
            else:
                self.error("unexpected {!r}".format(self.peek()[1]))
        if len(atoms) != 1:
            self.error("conjunction without '->'")
        return QuasiIdentity(premises, atoms[0])


def parse_law(text, context=None, line=1):
    """Parse one law, resolving predicates against `context` if given."""
    predicates = aliases = None
    if context is not None:
        predicates = set(context.predicates)
        aliases = context.aliases
    return _LawParser(text, line, predicates, aliases).law()


def parse_laws(text, context=None):
    """Parse a file of laws (no declarations) in the signature of
    `context`."""
    laws = []
    for number, line in enumerate(text.splitlines(), 1):
        content = line.split('#', 1)[0]
        if content.strip():
            laws.append(parse_law(content, context, number))
    return laws


def parse(text):
    """Parse presentation text.

    Raises
    ------
    ParseError
        With the 1-based line and column of the first problem.
    """
    style = None
    declared = {name: [] for name in _DECLARATIONS}
    comments = []
    laws = []
    for number, line in enumerate(text.splitlines(), 1):
        content, _, comment = line.partition('#')
        if not content.strip():
            if comment.strip() and not laws:
                comments.append(comment.strip())
            continue
        words = content.split()
        if words[0] == 'style':
            if len(words) != 2:
                raise ParseError("style takes one value", number, 1)
            style = words[1]
        elif words[0] in _DECLARATIONS and '(' not in content \
                and '=' not in content:
            declared[words[0]].extend(words[1:])
        else:
            laws.append((number, content))
    if style is None:
        raise ParseError("missing style declaration", 1, 1)
    aliases = {'E': 'U'} if style == 'second' else {}
    predicates = tuple(declared['pred'])
    parsed = [
        _LawParser(content, number, set(predicates), aliases).law()
        for number, content in laws]
    try:
        return Presentation(style, predicates, declared['fun'],
                            declared['const'], parsed, comments, aliases)
    except ValueError as err:
        raise ParseError(str(err), 1, 1) from None


def render(presentation):
    """Canonical text of a presentation; ``parse(render(p)) == p``."""
    lines = ["# {}".format(comment) for comment in presentation.comments]
    lines.append("style {}".format(presentation.style))
    for keyword, names in (('pred', presentation.predicates),
                           ('fun', presentation.functions),
                           ('const', presentation.constants)):
        if names:
            lines.append(" ".join((keyword,) + tuple(names)))
    lines.extend(str(law) for law in presentation.laws)
    return "\n".join(lines) + "\n"
