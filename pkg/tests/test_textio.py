import random

import pytest

from conftest import random_braid
from tricross.braids import braid_closure, fold_braid
from tricross.diagram import Diagram, OrientedDiagram
from tricross.errors import InvalidDiagramError, ParseError
from tricross.ncross import double_to_even_n
from tricross.fixtures import FIXTURE_NAMES, load_fixture
from tricross.textio import (
    parse_diagram,
    parse_multi,
    parse_oriented,
    parse_pd,
    serialize,
    serialize_multi,
    serialize_oriented,
    serialize_pd,
)


def same(a: Diagram, b: Diagram) -> bool:
    """Equal up to renumbering the edges in order."""
    return a.relabeled() == b.relabeled()


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_round_trip(name):
    d = load_fixture(name)
    assert same(parse_diagram(serialize(d)), d)


def test_contiguous_labels_survive_unchanged():
    d = load_fixture("3_1")
    assert parse_pd(serialize_pd(d)) == d
    assert serialize_pd(d).splitlines()[0] == "x(1,5,2,4)"


def test_gaps_are_closed():
    d = parse_diagram("x(10,50,20,40)\nx(30,10,40,60)\nx(50,30,60,20)")
    assert parse_diagram(serialize(d)) == load_fixture("3_1")


def test_comments_and_blank_lines():
    d = parse_diagram("# trefoil\n\nx(1,5,2,4)  # first\nx(3,1,4,6)\nx(5,3,6,2)\n")
    assert len(d.crossings) == 3


def test_triple_role_letters():
    d = load_fixture("D1")
    assert d.crossings[0].roles == (1, 2, 3)
    assert "TMB" in serialize(d)


def test_multi_statement():
    d = parse_multi(serialize(double_to_even_n(load_fixture("3_1"), 4)))
    assert d.n == 4
    assert parse_multi(serialize_multi(d)) == d


def test_oriented_round_trip():
    od = braid_closure(load_fixture("sigma1_4", as_braid=True), oriented=True)
    back = parse_oriented(serialize_oriented(od))
    assert same(back.diagram, od.diagram)
    assert back.entries == OrientedDiagram(od.diagram.relabeled(), od.entries).entries


def test_loop_statement():
    d = parse_diagram("loop\nloop", allow_split=True)
    assert d.loops == 2 and not d.crossings


@pytest.mark.parametrize(
    "text",
    ["x(1,2,3)x", "y(1,2,3,4)", "x(1,a,2,2)", "m4(1,2|1,2)", "orient c1=?"],
)
def test_syntax_errors(text):
    with pytest.raises(ParseError) as exc:
        parse_multi(text)
    assert exc.value.code == "E_PARSE"


@pytest.mark.parametrize(
    "text, code",
    [
        ("x(1,2,3,4)", "E_EDGE_MULTIPLICITY"),
        ("t(1,2,3,4,5,6|TMT)", "E_ROLES"),
        ("t(1,1,2,2,3,3|TMQ)", "E_ROLES"),
        ("m3(1,1,2,2,3,3|1,1,2)", "E_ROLES"),
        ("x(1,2,2,1)\nx(3,4,4,3)", "E_DISCONNECTED"),
        ("x(1,2,3,4)\nx(1,2,3,4)", "E_NONPLANAR"),
    ],
)
def test_invalid_diagrams(text, code):
    with pytest.raises(InvalidDiagramError) as exc:
        parse_multi(text)
    assert exc.value.code == code


def test_random_round_trips():
    rng = random.Random(7)
    for _ in range(100):
        b = random_braid(rng, max_strings=4, max_letters=8)
        d = braid_closure(b) if rng.random() < 0.5 else fold_braid(b)
        assert same(parse_multi(serialize(d)), d)
        assert serialize(parse_multi(serialize(d))) == serialize(d)
