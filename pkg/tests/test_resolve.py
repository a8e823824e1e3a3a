import random

import pytest

from conftest import random_braid
from tricross.braids import fold_braid, full_twist_generator
from tricross.diagram import components, orient
from tricross.errors import InvalidDiagramError
from tricross.fixtures import load_fixture
from tricross.ncross import double_to_even_n
from tricross.resolve import _arrangement, line_offsets, resolve_multi, resolve_triple
from tricross.skein import bracket_double, bracket_triple, normalized_polynomial


def test_double_diagrams_pass_through():
    d = load_fixture("3_1")
    assert resolve_multi(d) is d


def test_triple_needs_triples():
    with pytest.raises(InvalidDiagramError) as exc:
        resolve_triple(load_fixture("3_1"))
    assert exc.value.code == "E_STRAND"


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_lines_in_general_position(n):
    points, chains = _arrangement(n)
    assert len(points) == n * (n - 1) // 2
    assert all(len(chain) == n - 1 for chain in chains.values())
    # with slot 0 at angle 0 the triple perturbation moves line 1 only
    if n == 3:
        assert [o != 0 for o in line_offsets(3)] == [False, True, False]


def test_d1_resolves_to_three_crossings():
    d = load_fixture("D1")
    r = resolve_triple(d)
    assert len(r.crossings) == 3
    assert components(r).count == components(d).count


@pytest.mark.parametrize("seed", range(15))
def test_counts_and_components(seed):
    b = random_braid(random.Random(seed), max_strings=4, max_letters=8, max_triples=6)
    d = fold_braid(b)
    r = resolve_multi(d)
    assert len(r.crossings) == 3 * len(d.crossings)
    assert components(r).count == components(d).count
    assert bracket_triple(d) == bracket_double(r)


@pytest.mark.parametrize("n", [4, 6])
def test_even_n_counts(n):
    md = double_to_even_n(load_fixture("3_1"), n)
    r = resolve_multi(md)
    assert len(r.crossings) == 3 * n * (n - 1) // 2
    assert components(r).count == 1
    assert normalized_polynomial(md) == normalized_polynomial(load_fixture("3_1"))


def test_orientation_carried_through():
    od = full_twist_generator(1, oriented=True)
    r = resolve_multi(od)
    assert len(r.diagram.crossings) == 6
    # every resolved crossing of a positive full twist has the same sign
    assert normalized_polynomial(od) == normalized_polynomial(r)
    assert normalized_polynomial(od) != normalized_polynomial(orient(od.diagram, {1: -1}))
