import dataclasses

import pytest

from enright_blattner.enright import (
    EpsilonTable,
    ResolutionTerm,
    check_howe_conditions,
    depth_ceiling,
    epsilon_extract,
    euler_character_check,
    order_slice,
    resolution_of,
    stabilization_check,
)
from enright_blattner.exceptions import OrderingHypothesisError, TruncationError
from enright_blattner.partitions import Partition, RationalWeight
from enright_blattner.rootsys import BlockStructure, triple_encode
from enright_blattner.series import b0_series

B111 = BlockStructure((1, 1, 1))
B313 = BlockStructure((3, 1, 3))

GOLDEN = [
    ((), (), 0, 1),
    ((1, 1), (1, 1), 1, -1),
    ((1, 1, 1), (2, 1), 2, 1),
    ((2, 1), (1, 1, 1), 2, 1),
    ((2, 1, 1), (2, 1, 1), 3, -1),
    ((2, 2, 2), (2, 2, 2), 4, 1),
]


@pytest.fixture(scope="module")
def golden():
    return resolution_of(B313, (0,), 26)


def test_extract_111():
    table = epsilon_extract(B111, 6)
    expected = {((k,), Partition((k,)), Partition()): 1 for k in range(4)}
    expected.update({((-k,), Partition(), Partition((k,))): 1 for k in range(1, 4)})
    assert table.entries == expected
    assert table.diagnostics == ()


@pytest.mark.parametrize("blocks", [(1, 2, 1), (1, 3, 1), (2, 3, 1), (1, 3, 2)])
def test_stable_range_kronecker(blocks):
    table = epsilon_extract(BlockStructure(blocks), 10)
    assert table.entries
    for (lam, mu, nu), c in table.entries.items():
        w = RationalWeight(lam)
        assert (mu, nu, c) == (w.plus, w.minus, 1)


@pytest.mark.parametrize("blocks", [(1, 1, 1), (2, 1, 2), (3, 1, 3), (2, 2, 2), (1, 2, 1)])
def test_entries_are_series_coefficients(blocks):
    bs = BlockStructure(blocks)
    depth = 10
    table = epsilon_extract(bs, depth)
    s = b0_series(bs, depth)
    p, n, q = blocks
    assert table.diagnostics == ()
    for (lam, mu, nu), c in table.entries.items():
        exponent = triple_encode(lam, mu.padded(p), nu.padded(q), bs)
        assert s.coefficient(exponent) == c


def test_slice_and_lambdas():
    table = epsilon_extract(B111, 6)
    assert table.slice((2,)) == {(Partition((2,)), Partition()): 1}
    assert table.lambdas()[0] == (3,)
    assert isinstance(table, EpsilonTable)


def test_golden_resolution(golden):
    got = [(tuple(t.mu), tuple(t.nu), t.degree, t.sign) for t in golden.terms]
    assert got == GOLDEN
    assert golden.stabilized
    assert golden.to_dict()["terms"][2] == {"mu": [1, 1, 1], "nu": [2, 1, 0], "degree": 2, "sign": 1, "multiplicity": 1}


def test_golden_euler(golden):
    assert euler_character_check(B313, (0,), golden)


def test_sign_flip_fails_euler(golden):
    flipped = [dataclasses.replace(t, sign=-t.sign) if t.degree == 0 else t for t in golden.terms]
    bad = dataclasses.replace(golden, terms=tuple(flipped))
    assert not euler_character_check(B313, (0,), bad)


def test_single_term_resolutions():
    res = resolution_of(B111, (5,), 12)
    assert [(t.mu, t.nu, t.degree, t.sign) for t in res.terms] == [((5,), (), 0, 1)]
    assert euler_character_check(B111, (5,), res)
    bs = BlockStructure((1, 2, 1))
    res = resolution_of(bs, (1, -2), 12)
    assert [(t.mu, t.nu, t.degree) for t in res.terms] == [((1,), (2,), 0)]
    assert euler_character_check(bs, (1, -2), res)


def test_auto_depth():
    res = resolution_of(B313, (0,), "auto")
    assert res.stabilized
    assert [(tuple(t.mu), tuple(t.nu), t.degree, t.sign) for t in res.terms] == GOLDEN


def test_auto_depth_hits_ceiling():
    with pytest.raises(TruncationError):
        resolution_of(B313, (3,), "auto", ceiling=16)


@pytest.mark.parametrize("lam, expected", [
    ((0,), [((), (), 0), ((1, 1), (1, 1), 1)]),
    ((1,), [((1,), (), 0), ((1, 1), (1,), 1)]),
    ((2,), [((2,), (), 0), ((2, 1), (1,), 1), ((2, 2), (1, 1), 2)]),
    ((-1,), [((), (1,), 0), ((1,), (1, 1), 1)]),
])
def test_resolutions_212(lam, expected):
    bs = BlockStructure((2, 1, 2))
    res = resolution_of(bs, lam, "auto")
    assert [(tuple(t.mu), tuple(t.nu), t.degree) for t in res.terms] == expected
    assert euler_character_check(bs, lam, res)


def test_ordering_hypothesis_violation_is_reported():
    # for lambda = 1 two consecutive size classes carry the same sign
    with pytest.raises(OrderingHypothesisError):
        resolution_of(B313, (1,), 28)


def test_order_slice_rejects_bad_signs():
    piece = {(Partition(), Partition()): 1, (Partition((1,)), Partition((1,))): 1}
    with pytest.raises(OrderingHypothesisError):
        order_slice(piece)


def test_order_slice_multiplicity():
    piece = {(Partition(), Partition()): 1, (Partition((1,)), Partition((1,))): -2}
    terms = order_slice(piece)
    assert terms[1] == ResolutionTerm(Partition((1,)), Partition((1,)), -1, 1, 2)
    assert terms[1].epsilon == -2


def test_empty_slice_is_truncation():
    with pytest.raises(TruncationError):
        resolution_of(B111, (5,), 8)


def test_stabilization_check():
    assert stabilization_check(B111, (0,), 4)
    assert stabilization_check(B313, (0,), 26)
    assert not stabilization_check(B313, (0,), 10)
    assert not stabilization_check(B111, (3,), 4)


def test_howe_conditions():
    with pytest.raises(ValueError):
        check_howe_conditions((1, 1, 0), BlockStructure((1, 3, 1)))
    with pytest.raises(ValueError):
        check_howe_conditions((0,), BlockStructure((1, 2, 1)))
    assert check_howe_conditions((2, 0, -1), BlockStructure((1, 3, 1))) == (2, 0, -1)


def test_depth_ceiling_env(monkeypatch):
    monkeypatch.setenv("ENRIGHT_BLATTNER_DEPTH_CEILING", "12")
    assert depth_ceiling() == 12
    monkeypatch.setenv("ENRIGHT_BLATTNER_DEPTH_CEILING", "x")
    with pytest.raises(ValueError):
        depth_ceiling()
    monkeypatch.delenv("ENRIGHT_BLATTNER_DEPTH_CEILING")
    assert depth_ceiling() == 28


def test_text_rendering(golden):
    text = golden.to_text()
    assert "degree 2: M[(1,1,1),(2,1,0)] + M[(2,1,0),(1,1,1)]" in text
