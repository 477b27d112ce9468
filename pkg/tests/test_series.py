import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from enright_blattner.blattner import BlattnerQuery, blattner_direct
from enright_blattner.exceptions import TruncationError
from enright_blattner.rootsys import BlockStructure, Root, is_dominant, phi_m_split, positive_roots
from enright_blattner.series import (
    LaurentSeries,
    b0_series,
    b0_three_factor,
    b_delta_series,
    coefficient,
    compact_character,
    delta_product,
    dominant_filter,
    dominant_terms,
    geometric_inverse,
    howe_space_character,
    matrix_space_character,
    root_coords,
)

B111 = BlockStructure((1, 1, 1))


def test_delta_product_examples():
    inside, _ = phi_m_split(B111)
    assert delta_product(inside, 3, 6) == LaurentSeries.one(3, 6)
    assert delta_product([], 4, 6) == LaurentSeries.one(4, 6)
    s = delta_product([Root(1, 2)], 3, 6)
    assert s.terms() == {(0, 0, 0): 1, (-1, 1, 0): -1}


def test_geometric_examples():
    s = geometric_inverse([Root(1, 2)], 3, 6)
    assert s.terms() == {(-k, k, 0): 1 for k in range(4)}
    _, nc = positive_roots(B111)
    assert geometric_inverse(nc, 3, 6).coefficient((-1, 0, 1)) == 1
    assert geometric_inverse([], 3, 6) == LaurentSeries.one(3, 6)


def test_b0_golden():
    s = b0_series(B111, 12)
    expected = {(-k, k, 0): 1 for k in range(7)}
    expected.update({(0, -k, k): 1 for k in range(1, 7)})
    assert s.terms() == expected
    assert dominant_filter(s, B111, "m'") == s


def test_b0_example_313():
    s = b0_series(BlockStructure((3, 1, 3)), 24)
    assert s.coefficient((-2, -2, -2, 0, 2, 2, 2)) == 1
    assert s.coefficient((0,) * 7) == 1


def test_three_factor_route_agrees():
    for blocks in [(1, 1, 1), (1, 2, 1), (2, 2, 2), (2, 1, 3)]:
        bs = BlockStructure(blocks)
        assert b0_three_factor(bs, 8) == b0_series(bs, 8)


def test_coefficient_rules():
    s = b0_series(B111, 6)
    assert coefficient(s, (0, 0, 0)) == 1
    assert coefficient(s, (-1, 1, 0)) == 1
    assert coefficient(s, (1, 0, -1)) == 0
    assert coefficient(s, (1, 0, 0)) == 0
    with pytest.raises(TruncationError):
        coefficient(s, (-4, 4, 0))


@pytest.mark.parametrize("blocks", [(1, 1, 1), (1, 2, 1), (2, 1), (1, 1, 1, 1)])
def test_b0_equals_direct_blattner(blocks):
    bs = BlockStructure(blocks)
    s = b0_series(bs, 8)
    zero = (0,) * bs.N
    for eta in itertools.product(range(-4, 5), repeat=bs.N):
        if s.in_window(eta):
            assert s.coefficient(eta) == blattner_direct(BlattnerQuery(bs, zero, eta))


@pytest.mark.parametrize("blocks", [(1, 1), (2, 1), (1, 2, 1)])
def test_b_delta_equals_direct_blattner(blocks):
    bs = BlockStructure(blocks)
    for delta in itertools.product(range(-1, 2), repeat=bs.N):
        if not is_dominant(delta, bs, "k'"):
            continue
        s = b_delta_series(bs, delta, 6)
        for eta in itertools.product(range(-3, 4), repeat=bs.N):
            if s.in_window(eta):
                assert s.coefficient(eta) == blattner_direct(BlattnerQuery(bs, delta, eta))


def test_b_delta_one_noncompact_root_is_zero_one():
    bs = BlockStructure((1, 1))
    for delta in [(0, 0), (2, -1), (3, 3)]:
        assert set(b_delta_series(bs, delta, 10).terms().values()) <= {0, 1}


def test_b_delta_trivial_is_b0():
    bs = BlockStructure((1, 2, 1))
    assert b_delta_series(bs, (0,) * 4, 8) == b0_series(bs, 8)


def test_compact_character_dimension():
    # F^(1) of GL_2 x GL_1 on blocks (1,1,1): classes {1,3} and {2}
    s = compact_character(B111, (1, 0, 0), 6)
    assert s.terms() == {(1, 0, 0): 1, (0, 0, 1): 1}


def test_dominant_filter_isolates_highest_weight():
    # Delta_m * ch L_m(xi) has a single m-dominant term e^xi
    bs = BlockStructure((2, 1))
    inside = {Root(1, 2)}
    ch = compact_character(bs, (2, 0, 0), 8)
    s = delta_product(inside, 3, 8)
    filtered = dominant_filter(s * ch, bs, "m'")
    assert filtered.terms() == {(2, 0, 0): 1}
    assert dominant_filter(LaurentSeries.one(3, 8), bs, "m'") == LaurentSeries.one(3, 8)


@pytest.mark.parametrize("blocks", [(1, 1, 1), (2, 2, 2), (1, 3, 2)])
def test_product_identities(blocks):
    bs = BlockStructure(blocks)
    depth = 8
    one = LaurentSeries.one(bs.N, depth)
    _, across = phi_m_split(bs)
    _, nc = positive_roots(bs)
    assert delta_product(across, bs.N, depth) * matrix_space_character(bs, depth) == one
    assert geometric_inverse(nc, bs.N, depth) == howe_space_character(bs, depth)


ROOTS4 = [Root(i, j) for i in range(1, 5) for j in range(i + 1, 5)]
root_sets = st.lists(st.sampled_from(ROOTS4), max_size=4)


def _random_series(data, depth=6):
    terms = {}
    for coords, c in data:
        xi = [0] * 4
        prev = 0
        for i, x in enumerate(coords):
            xi[i] = prev - x
            prev = x
        xi[3] = prev
        terms[tuple(xi)] = terms.get(tuple(xi), 0) + c
    return LaurentSeries.from_terms(terms, 4, depth)


term = st.tuples(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-3, 3))
series_st = st.lists(term, max_size=5).map(_random_series)


@settings(max_examples=40, deadline=None)
@given(series_st, series_st, series_st)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentSeries(4, 6)


@settings(max_examples=30, deadline=None)
@given(root_sets)
def test_delta_times_geometric_is_one(roots):
    assert delta_product(roots, 4, 8) * geometric_inverse(roots, 4, 8) == LaurentSeries.one(4, 8)


def test_binomial_ops_invert():
    s = b0_series(BlockStructure((1, 2, 1)), 8)
    v = root_coords(Root(1, 3), 4)
    assert s.times_binomial(v).over_binomial(v) == s


def test_overflow_switches_to_python_ints():
    big = 2 ** 62
    s = LaurentSeries.from_terms({(0, 0): big}, 2, 4)
    doubled = s + s
    assert doubled.coefficient((0, 0)) == 2 ** 63
    assert doubled.data.dtype == object
    g = geometric_inverse([Root(1, 2)], 2, 4) * s
    assert g.coefficient((-2, 2)) == big


def test_series_is_immutable():
    s = LaurentSeries.one(3, 4)
    with pytest.raises(ValueError):
        s.data[0, 0] = 5


def test_incompatible_series():
    with pytest.raises(ValueError):
        LaurentSeries.one(3, 4) + LaurentSeries.one(3, 6)
    with pytest.raises(ValueError):
        LaurentSeries.one(3, 4) + LaurentSeries(3, 4, (1, 0, -1))
    with pytest.raises(ValueError):
        LaurentSeries.from_terms({(1, 0, 0): 1}, 3, 4)


def test_json_and_text_ordering():
    s = b0_series(B111, 4)
    out = json.loads(s.to_json())
    assert [t["exponent"] for t in out] == [[0, 0, 0], [-1, 1, 0], [0, -1, 1], [-2, 2, 0], [0, -2, 2]]
    assert s.to_text().splitlines()[1] == "+1 e^(-1,1,0)"


def test_dominant_terms_window():
    s = b0_series(BlockStructure((1, 2, 1)), 6)
    terms = dominant_terms(s, BlockStructure((1, 2, 1)), "m'")
    assert all(sum(map(abs, e)) <= 6 for e in terms)
    assert terms == {e: c for e, c in s.terms().items() if is_dominant(e, BlockStructure((1, 2, 1)), "m'")}


def test_data_shape_is_box():
    s = LaurentSeries.one(4, 7)
    assert s.data.shape == (4, 4, 4) and s.data.dtype == np.int64
