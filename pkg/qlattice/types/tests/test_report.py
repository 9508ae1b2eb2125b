# -*- coding: utf-8 -*-
import numpy as np

from ..report import Check, Report


def test_check_line():
    assert Check("claim3", True).line() == "CHECK claim3 PASS"
    assert Check("claim3", False, "x=1").line() == "CHECK claim3 FAIL x=1"


def test_report_lines():
    report = Report("demo", values={'size': 3, 'flag': np.bool_(True),
                                    'items': ['a', 'b']})
    report.add("first", True)
    report.add("second", False, "witness")
    report.notes.append("a note")
    assert not report.passed
    assert report.check("second").witness == "witness"
    assert report.lines() == [
        "size=3", "flag=true", "items=a,b",
        "CHECK first PASS", "CHECK second FAIL witness", "# a note"]


def test_extend():
    inner = Report("inner")
    inner.add("check", True)
    outer = Report("outer")
    outer.extend(inner, prefix="inner")
    assert [check.name for check in outer.checks] == ["inner.check"]
    assert outer.passed
    assert Report("empty").passed
