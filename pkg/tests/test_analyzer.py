import math

import pytest

from expected import C3_EXACT, VOLUMES
from oracles import determinant_oracle, v_oct_oracle, v_tet_oracle
from rational import CONWAY, determinant, plat_diagram
from tricross.analyzer import (
    TABLE_LIST,
    V_OCT,
    V_TET,
    c3_bounds,
    cn_bounds,
    knot_table_check,
    volume_bounds,
)
from tricross.braids import BraidWord, full_twist_generator
from tricross.diagram import is_alternating, is_reduced, validate
from tricross.errors import PreconditionError
from tricross.polynomial import span
from tricross.resolve import resolve_multi
from tricross.skein import bracket_double, normalized_polynomial
from tricross.textio import parse_diagram, parse_multi

SCHEMA_KEYS = {"crossings", "alternating", "reduced", "twist_number", "c3", "cn", "volume_bounds"}
C3_KEYS = {"lower", "lower_provenance", "upper", "upper_witness", "exact"}


def assert_consistent(rep, reference):
    c3 = rep.c3
    if c3.upper is not None:
        assert c3.lower <= c3.upper
        w = c3.witness
        assert validate(w.diagram).ok
        assert all(c.n == 3 for c in w.diagram.crossings)
        assert len(w.diagram.crossings) == c3.upper
        # the witness text parses back to the same link
        assert normalized_polynomial(parse_multi(w.text)) == normalized_polynomial(w.diagram)
    assert c3.exact == (c3.upper is not None and c3.lower == c3.upper)
    assert c3.lower_provenance in ("span/8", "alternating c/2", "crossings/3", "none")


@pytest.mark.parametrize("name", sorted(C3_EXACT))
def test_exact_table_values(fixture, name):
    d = fixture(name)
    rep = c3_bounds(d)
    assert rep.c3.exact and rep.c3.upper == C3_EXACT[name]
    assert rep.known_c == len(d.crossings)
    assert_consistent(rep, d)


def test_figure_eight_report(fixture):
    rep = c3_bounds(fixture("4_1"))
    assert rep.c3.lower_candidates["span/8"] == 2
    assert rep.c3.lower_provenance == "span/8"
    assert rep.c3.upper_provenance == "bigon_twist"
    assert rep.twist_number == 2
    js = rep.to_json()
    assert set(js) == SCHEMA_KEYS
    assert set(js["c3"]) == C3_KEYS
    assert js["c3"]["exact"] is True


def test_trefoil_uses_three_crossing_circle(fixture):
    rep = c3_bounds(fixture("3_1"))
    assert rep.c3.upper_provenance == "circle3_twist"
    assert rep.c3.lower_candidates["span/8"] == 2


@pytest.mark.parametrize("m", [1, 2])
def test_full_twist_exact(m):
    w = full_twist_generator(m, oriented=True)
    rep = c3_bounds(resolve_multi(w), known_c=6 * m, witnesses=[w])
    assert rep.c3.lower == 2 * m and rep.c3.lower_provenance == "crossings/3"
    assert rep.c3.upper == 2 * m and rep.c3.exact
    assert_consistent(rep, None)


def test_multi_input_is_own_witness():
    rep = c3_bounds(full_twist_generator(1, oriented=True), known_c=6)
    assert rep.crossings == 6
    assert rep.c3.upper == 2 and rep.c3.upper_provenance == "supplied"


def test_braid_input(fixture):
    rep = c3_bounds(BraidWord(2, (1, 1, 1, 1, 1)))
    assert rep.c3.upper_candidates["braid_fold"] == 4
    # the 2-braid knot gets c - 1 from its braid, not an exact value
    assert rep.c3.lower == 3 and rep.c3.upper == 4 and not rep.c3.exact


def test_two_braid_link_from_covering(fixture):
    rep = c3_bounds(fixture("sigma1_4"))
    assert rep.c3.upper_candidates["covering_fold"] == 2
    assert rep.c3.exact


def test_no_span_bound_when_maybe_trivial():
    d = parse_diagram("x(1,2,2,1)")
    rep = c3_bounds(d, assume_nontrivial=False)
    assert "span/8" not in rep.c3.lower_candidates


def test_span_cap_notice(fixture):
    rep = c3_bounds(fixture("7_2"), cap=5)
    assert "span/8" not in rep.c3.lower_candidates
    assert any("span bound omitted" in n for n in rep.notices)
    assert rep.c3.exact  # alternating c/2 still applies


@pytest.mark.parametrize("conway", CONWAY, ids=lambda cv: "".join(map(str, cv)))
def test_rational_corpus(conway):
    d = plat_diagram(conway)
    p = bracket_double(d)
    assert determinant_oracle(p.terms) == determinant(conway)
    assert is_alternating(d) and is_reduced(d)
    assert span(p) == 4 * len(d.crossings)
    rep = c3_bounds(d)
    assert rep.c3.lower_candidates["span/8"] <= rep.c3.upper
    assert_consistent(rep, d)


def test_span_bound_below_upper_on_twenty_diagrams(fixture):
    diagrams = [fixture(n) for n in ("3_1", "4_1", "5_1", "5_2", "6_1", "7_2")]
    diagrams += [plat_diagram(cv) for cv in CONWAY]
    assert len(diagrams) >= 20
    for d in diagrams:
        c3 = c3_bounds(d).c3
        assert c3.lower_candidates["span/8"] <= c3.upper


def test_cn_bounds():
    assert cn_bounds(6, 4) == (1, 5)
    assert cn_bounds(3, 2) == (3, 3)
    assert cn_bounds(7, 3) == (3, 6)
    # an n-string braid with c = n(n-1)m/2
    for n in (3, 4, 5):
        for m in (1, 2, 3):
            assert cn_bounds(n * (n - 1) * m // 2, n)[0] == m
    with pytest.raises(PreconditionError):
        cn_bounds(0, 3)
    with pytest.raises(PreconditionError):
        cn_bounds(5, 1)


@pytest.mark.parametrize("c", [1, 5, 12, 40])
def test_cn_monotone(c):
    lowers = [cn_bounds(c, n)[0] for n in range(3, 12)]
    uppers = {cn_bounds(c, n)[1] for n in range(3, 12)}
    assert lowers == sorted(lowers, reverse=True)
    assert uppers == {c - 1}


def test_cn_in_report(fixture):
    rep = c3_bounds(fixture("6_1"), ns=(3, 4))
    assert rep.cn == [(3, 2, 5), (4, 1, 5)]


def test_volume_constants():
    assert V_OCT == pytest.approx(v_oct_oracle(), abs=1e-9)
    assert V_TET == pytest.approx(v_tet_oracle(), abs=1e-9)


def test_volume_values():
    by = {v.formula: v for v in volume_bounds(c=7, c3=2, tw=2, hyperbolic=True)}
    assert math.isclose(by["triple_crossings"].value, VOLUMES["triple_crossings c3=2"], abs_tol=1e-6)
    assert math.isclose(by["crossings"].value, VOLUMES["crossings c=7"], abs_tol=1e-6)
    assert math.isclose(by["twist_number"].value, VOLUMES["twist_number tw=2"], abs_tol=1e-6)
    assert all(v.applicable for v in by.values())


def test_volume_applicability():
    by = {v.formula: v for v in volume_bounds(c=4, c3=2)}
    assert not by["crossings"].applicable
    assert "5 crossings" in by["crossings"].reason
    assert "hyperbolic" in by["triple_crossings"].reason
    missing = {v.formula: v for v in volume_bounds()}
    assert all(v.value is None and not v.applicable for v in missing.values())


@pytest.mark.parametrize(
    "name, verdict",
    [("4_1", "match"), ("6_1", "match"), ("7_2", "match"), ("3_1", "match"), ("5_1", "inapplicable")],
)
def test_table_check(fixture, name, verdict):
    v = knot_table_check(name, fixture(name))
    assert v.verdict == verdict
    if verdict == "match":
        assert v.report.c3.upper == v.expected


def test_table_list():
    assert len(TABLE_LIST) >= 20
    assert {"3_1", "4_1", "5_2", "6_1", "7_2"} <= set(TABLE_LIST)
