# -*- coding: utf-8 -*-
"""Exceptions raised by qlattice.

Every error carries a one-line message suitable for machine consumption; the
command line prints it verbatim. Errors that point at specific carrier
elements keep them in :attr:`witness`.
"""


class QLatticeError(ValueError):
    """Base class for domain errors."""


class WitnessError(QLatticeError):
    """Error with a reason and an optional tuple of witnessing values."""

    def __init__(self, reason, witness=()):
        self.reason = reason
        self.witness = tuple(witness)
        if self.witness:
            message = "{} at ({})".format(
                reason, ",".join(str(value) for value in self.witness))
        else:
            message = reason
        super().__init__(message)


class SemilatticeError(WitnessError):
    """A join table violates a semilattice axiom."""


class OperatorError(WitnessError):
    """A map is not a (+,0)-endomorphism."""


class OrderError(WitnessError):
    """A pair of elements is not in the required order."""


class ClosureBoundError(QLatticeError):
    """Monoid closure grew beyond its configured bound."""


class ExhaustiveBoundError(QLatticeError):
    """Exhaustive relation scan requested above its configured bound."""


class MonoidPropertyError(QLatticeError):
    """An operator monoid lacks a property an operation requires."""

    def __init__(self, flag, message=None):
        self.flag = flag
        super().__init__(
            message or "monoid lacks required property: {}".format(flag))


class StarConditionError(WitnessError):
    """An order filter fails condition (*)."""

    def __init__(self, witness=()):
        super().__init__("condition (*) fails", witness)


class ParseError(QLatticeError):
    """Malformed input text, with 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__("line {}, column {}: {}".format(
            line, column, message))


class ReductionError(QLatticeError):
    """A quasi-identity uses symbols outside its context."""


class UninterpretedSymbolError(QLatticeError):
    """A structure gives no interpretation for a symbol."""

    def __init__(self, symbol):
        self.symbol = symbol
        super().__init__("uninterpreted symbol: {}".format(symbol))


class VerificationError(WitnessError):
    """A computed object contradicts a guaranteed property.

    Signals an implementation bug; never patched over silently."""


class IsomorphismError(VerificationError):
    """The congruence to eon-relation correspondence failed."""


class EndomorphismError(VerificationError):
    """Free-structure endomorphisms differ from their known description."""
