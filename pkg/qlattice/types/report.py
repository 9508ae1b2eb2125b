# -*- coding: utf-8 -*-
import numpy as np

from .base import Type
from ..base import Property


class Check(Type):
    """Outcome of one named verification check."""

    name = Property(str, doc="Machine-readable check name")
    passed = Property(bool, doc="Whether the check passed")
    witness = Property(str, default=None,
                       doc="First counterexample, or extra detail")

    def line(self):
        line = "CHECK {} {}".format(self.name, "PASS" if self.passed else "FAIL")
        if self.witness:
            line += " " + self.witness
        return line


class Report(Type):
    """Named collection of checks and ``key=value`` results."""

    title = Property(str, doc="Report title")
    checks = Property(list, default=None, doc="Checks, in run order")
    values = Property(dict, default=None,
                      doc="Scalar results, printed as ``key=value``")
    notes = Property(list, default=None, doc="Free-text notes")

    def __init__(self, title, checks=None, values=None, notes=None,
                 *args, **kwargs):
        super().__init__(title, list(checks or []), dict(values or {}),
                         list(notes or []), *args, **kwargs)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def add(self, name, passed, witness=None):
        self.checks.append(Check(name, bool(passed), witness))

    def extend(self, report, prefix=None):
        """Append the checks of another report, optionally prefixing names."""
        for check in report.checks:
            name = "{}.{}".format(prefix, check.name) if prefix else check.name
            self.checks.append(Check(name, check.passed, check.witness))

    def check(self, name):
        return next(check for check in self.checks if check.name == name)

    def lines(self):
        lines = ["{}={}".format(key, _format(value))
                 for key, value in self.values.items()]
        lines.extend(check.line() for check in self.checks)
        lines.extend("# {}".format(note) for note in self.notes)
        return lines


def _format(value):
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (list, tuple)):
        return ",".join(_format(item) for item in value)
    return str(value)
