import itertools

import pytest
from hypothesis import given, settings, strategies as st

from enright_blattner.exceptions import UnsupportedRankError
from enright_blattner.genlr import (
    branching,
    gen_lr_coeff,
    gen_tensor_decompose,
    gen_tensor_oracle,
    hermitian_blattner_as_genlr,
    hollow_tables,
    rational_lr_coeff,
    weyl_dimension,
)
from enright_blattner.lr import lr_coeff
from enright_blattner.partitions import join, rational_weights

RANK3 = list(rational_weights(3, 3))


def unit(n):
    return join((1,), (), n)


def dual(n):
    return join((), (1,), n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_adjoint_example(n):
    assert gen_lr_coeff(unit(n), dual(n), join((1,), (1,), n), n) == 1
    assert gen_lr_coeff(unit(n), dual(n), (0,) * n, n) == 1


def test_adjoint_decomposition():
    assert gen_tensor_decompose((1, 0, 0), (0, 0, -1), 3) == {(1, 0, -1): 1, (0, 0, 0): 1}


def test_trivial_factor_and_rank_one():
    assert gen_tensor_decompose((2, 0, -1), (0, 0, 0), 3) == {(2, 0, -1): 1}
    assert gen_tensor_decompose((3,), (-5,), 1) == {(-2,): 1}


def test_polynomial_case_is_classical():
    for g in [(3, 1, 0, 0), (2, 2, 0, 0), (2, 1, 1, 0)]:
        assert gen_lr_coeff((2, 1, 0, 0), (1, 0, 0, 0), g, 4) == lr_coeff((2, 1), (1,), g)


def test_hollow_table_sizes():
    for table, c in hollow_tables((2, 0, -1), (1, 0, -1), (1, 0, -1)):
        assert c > 0
        assert table.row_sizes() == (2, 1, 1)
        assert table.column_sizes() == (1, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dimension_consistency(n):
    ws = list(rational_weights(n, 3 if n < 4 else 2))
    for a, b in itertools.product(ws, repeat=2):
        try:
            dec = gen_tensor_decompose(a, b, n)
        except UnsupportedRankError:
            continue
        assert sum(c * weyl_dimension(g) for g, c in dec.items()) == weyl_dimension(a) * weyl_dimension(b)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(RANK3), st.sampled_from(RANK3))
def test_matches_character_oracle(a, b):
    oracle = gen_tensor_oracle(a, b, 3)
    try:
        assert gen_tensor_decompose(a, b, 3) == oracle
    except UnsupportedRankError:
        pass
    for g in set(oracle) | {a}:
        assert rational_lr_coeff(a, b, g, 3) == oracle.get(g, 0)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(RANK3), st.sampled_from(RANK3))
def test_commutative(a, b):
    try:
        left = gen_tensor_decompose(a, b, 3)
    except UnsupportedRankError:
        with pytest.raises(UnsupportedRankError):
            gen_tensor_decompose(b, a, 3)
        return
    assert left == gen_tensor_decompose(b, a, 3)


def test_small_rank_is_flagged():
    with pytest.raises(UnsupportedRankError):
        gen_tensor_decompose((1, -1), (1, -1), 2)


def test_weight_rank_checked():
    with pytest.raises(ValueError):
        gen_lr_coeff((1, 0), (0, 0, 0), (1, 0, 0), 3)


def test_hermitian_examples():
    assert hermitian_blattner_as_genlr((), (), (), (), 2, 2) == 1
    assert hermitian_blattner_as_genlr((1,), (1,), (), (), 2, 2) == 1
    with pytest.raises(ValueError):
        hermitian_blattner_as_genlr((1, 1, 1), (), (), (), 2, 2)


def test_branching_dimensions():
    for kappa in [(2, 1, 0), (1, 0, -1), (0, -1, -2), (3, 3, 3)]:
        parts = branching(kappa, 1, 2)
        total = sum(c * weyl_dimension(a) * weyl_dimension(b) for (a, b), c in parts.items())
        assert total == weyl_dimension(kappa)


def test_weyl_dimension():
    assert weyl_dimension((1, 0, -1)) == 8
    assert weyl_dimension((2, 0)) == 3
