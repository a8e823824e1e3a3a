import random

import pytest

from conftest import random_braid
from expected import BRACKETS, DETERMINANTS, SPANS
from oracles import bracket_oracle, determinant_oracle
from tricross.braids import BraidWord, braid_closure, fold_braid
from tricross.diagram import Diagram, mirror, orient, reflect
from tricross.errors import CapExceededError, InvalidDiagramError
from tricross.polynomial import A, delta, span
from tricross.resolve import resolve_triple
from tricross.skein import (
    bracket,
    bracket_double,
    bracket_triple,
    normalized_polynomial,
    state_extremes,
    triple_smoothings,
    writhe,
)
from tricross.textio import parse_diagram

DOUBLE_FIXTURES = ["kink", "3_1", "4_1", "5_1", "5_2", "6_1", "7_2", "sigma1_4", "sigma1sigma2_3m1"]


@pytest.mark.parametrize("name", DOUBLE_FIXTURES)
def test_bracket_matches_frozen_and_oracle(fixture, name):
    d = fixture(name)
    got = bracket_double(d)
    assert got.to_pairs() == BRACKETS[name]
    assert got.terms == bracket_oracle([c.slots for c in d.crossings])


@pytest.mark.parametrize("name", sorted(DETERMINANTS))
def test_determinants_and_spans(fixture, name):
    p = bracket_double(fixture(name))
    assert determinant_oracle(p.terms) == DETERMINANTS[name]
    assert span(p) == SPANS[name]


@pytest.mark.parametrize("name", DOUBLE_FIXTURES)
def test_frontier_equals_enumeration(fixture, name):
    d = fixture(name)
    assert bracket_double(d, method="frontier") == bracket_double(d, method="enumerate")


def test_kink_bracket_is_minus_a_cubed():
    assert bracket_double(parse_diagram("x(1,2,2,1)")) == -(A**-3)


def test_d1_triple_bracket(fixture):
    d = fixture("D1")
    assert bracket_triple(d) == bracket_double(resolve_triple(d))


def test_five_smoothings_per_triple(fixture):
    c = fixture("D1").crossings[0]
    states = triple_smoothings(c)
    assert sorted(kind for _, _, kind in states) == ["B", "M", "T", "U1", "U2"]
    # each state pairs all six slots
    for _, pairing, _ in states:
        assert sorted(s for pair in pairing for s in pair) == list(range(6))


def test_caps():
    long = braid_closure(BraidWord(2, (1,) * 21))
    with pytest.raises(CapExceededError) as exc:
        bracket_double(long)
    assert exc.value.code == "E_CAP"
    # reduced alternating, so the span is 4c
    assert span(bracket_double(long, cap=None)) == 4 * 21
    folded = fold_braid(BraidWord(2, (1,) * 11))
    assert len(folded.crossings) == 10
    with pytest.raises(CapExceededError):
        bracket_triple(folded)


def test_empty_diagram_rejected():
    with pytest.raises(InvalidDiagramError) as exc:
        bracket(Diagram())
    assert exc.value.code == "E_EMPTY"


def test_loops_multiply_by_delta(fixture):
    d = fixture("3_1")
    split = Diagram(d.crossings, loops=2)
    assert bracket(split, allow_split=True) == bracket(d) * delta**2
    assert bracket(Diagram(loops=1), allow_split=True) == 1


def test_wrong_arity_rejected(fixture):
    with pytest.raises(InvalidDiagramError):
        bracket_triple(fixture("3_1"))
    with pytest.raises(InvalidDiagramError):
        bracket_double(fixture("D1"))


@pytest.mark.parametrize("name", ["3_1", "5_2", "D1", "sigma1sigma2_3m1"])
def test_mirror_inverts_a(fixture, name):
    d = fixture(name)
    assert bracket(mirror(d)) == bracket(d).substitute_inverse()


def test_reflection_inverts_a(fixture):
    d = fixture("4_1")
    assert bracket(reflect(d)) == bracket(d).substitute_inverse()


def test_normalized_polynomial_invariants(fixture):
    # a kink changes the bracket but not the normalized polynomial
    assert normalized_polynomial(parse_diagram("x(1,2,2,1)")) == 1
    # Jones polynomial t + t^3 - t^4 of a trefoil, with t = A^-4
    jones = A**-4 + A**-12 - A**-16
    p = normalized_polynomial(fixture("3_1"))
    assert p in (jones, jones.substitute_inverse())
    assert normalized_polynomial(mirror(fixture("3_1"))) == p.substitute_inverse()
    # the figure eight is amphichiral
    f8 = normalized_polynomial(fixture("4_1"))
    assert f8 == f8.substitute_inverse()


def test_writhe_sign_flips_under_mirror(fixture):
    od = orient(fixture("5_2"))
    assert abs(writhe(od)) == 5
    assert writhe(mirror(od)) == -writhe(od)


@pytest.mark.parametrize("seed", range(10))
def test_state_extremes_bounds(fixture, seed):
    b = random_braid(random.Random(seed), max_strings=4, max_letters=8, max_triples=6)
    for d in (fixture("D1"), fold_braid(b)):
        ex = state_extremes(d)
        p = bracket_triple(d)
        assert p.max_degree <= ex.M_P
        assert p.min_degree >= ex.m_P
        assert span(p) <= 8 * ex.t
        assert ex.loops_max + ex.loops_min <= 2 * ex.t + 2
