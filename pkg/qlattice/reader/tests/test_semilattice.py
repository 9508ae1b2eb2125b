# -*- coding: utf-8 -*-
from textwrap import dedent

import pytest

from ...exceptions import ClosureBoundError, ParseError, SemilatticeError
from ..semilattice import SemilatticeReader, parse_semilattices


def _write(tmpdir, text):
    filename = tmpdir.join("input.slat")
    with filename.open('w') as file:
        file.write(dedent(text))
    return filename.strpath


def test_fixture(fixture_dir):
    with SemilatticeReader(fixture_dir / "s22_swap.slat") as reader:
        instances = list(reader)
    assert len(instances) == 1
    semilattice, monoid = instances[0]
    assert semilattice.labels == ('0', 'a', 'b', '1')
    assert monoid.names == ('i', 's')
    assert reader.current is instances[0]


def test_blocks_and_zero(tmpdir):
    path = _write(tmpdir, """\
        # zero given second
        semilattice 2
        join 0 0 0 1
        zero 1
        labels t z
        op c 1 1
        end

        semilattice 1
        join 0
        zero 0
        end
        """)
    first, second = SemilatticeReader(path)
    semilattice, monoid = first
    assert semilattice.labels == ('z', 't')
    assert semilattice.source_order == (1, 0)
    assert monoid.by_name('c').images == (0, 0)
    assert second[0].size == 1
    assert second[1].is_trivial


@pytest.mark.parametrize('text, line, message', [
    ("join 0\n", 1, "expected 'semilattice'"),
    ("semilattice 1\njoin 0\nzero 0\n", 3, "missing 'end'"),
    ("semilattice 1\njoin 0\nend\n", 3, "missing zero"),
    ("semilattice 1\nzero 0\nend\n", 3, "missing join"),
    ("semilattice 1\njoin zero\n", 2, "expected integers"),
    ("semilattice 1 2\n", 1, "semilattice takes one size"),
    ("semilattice 1\nmeet 0\n", 2, "unknown keyword 'meet'"),
    ("semilattice 1\nsemilattice 1\n", 2, "'semilattice' inside a block"),
    ("semilattice 1\nop\n", 2, "op needs a name"),
])
def test_parse_errors(tmpdir, text, line, message):
    with pytest.raises(ParseError) as excinfo:
        list(SemilatticeReader(_write(tmpdir, text)))
    assert excinfo.value.line == line
    assert str(excinfo.value) == "line {}, column 1: {}".format(line, message)


def test_validation_errors():
    lines = enumerate(["semilattice 2", "join 0 1 0 1", "zero 0", "end"], 1)
    with pytest.raises(SemilatticeError, match="not commutative"):
        list(parse_semilattices(lines))


def test_closure_bound():
    lines = list(enumerate([
        "semilattice 4", "join 0 1 2 3 1 1 2 3 2 2 2 3 3 3 3 3", "zero 0",
        "op f 0 0 1 2", "op g 0 1 1 3", "end"], 1))
    with pytest.raises(ClosureBoundError):
        list(parse_semilattices(lines, closure_bound=2))
    (semilattice, monoid), = parse_semilattices(lines)
    assert len(monoid) > 2
