"""Built-in cross-checks behind ``enright-blattner selfcheck``.

``quick`` runs the golden values only.  ``full`` adds exhaustive agreement
sweeps between independent routes to the same numbers.
"""

from __future__ import annotations

import itertools
import time
from typing import Callable, Iterator

from .blattner import (
    BlattnerQuery,
    blattner_direct,
    blattner_hermitian,
    blattner_two_nc_stable,
    hermitian_weight,
    q_count,
)
from .enright import epsilon_extract, euler_character_check, resolution_of
from .genlr import gen_tensor_decompose, gen_tensor_oracle, hermitian_blattner_as_genlr
from .lr import cauchy_identity_holds, lr_coeff, schur_oracle, tensor_decompose
from .exceptions import UnsupportedRankError
from .partitions import Partition, RationalWeight, partitions_in_box, partitions_up_to, rational_weights
from .rootsys import BlockStructure, is_dominant, phi_m_split, positive_roots
from .series import (
    LaurentSeries,
    b0_series,
    b0_three_factor,
    delta_product,
    geometric_inverse,
    howe_space_character,
    matrix_space_character,
)

GOLDEN_313 = [
    ((), (), 0, 1),
    ((1, 1), (1, 1), 1, -1),
    ((1, 1, 1), (2, 1), 2, 1),
    ((2, 1), (1, 1, 1), 2, 1),
    ((2, 1, 1), (2, 1, 1), 3, -1),
    ((2, 2, 2), (2, 2, 2), 4, 1),
]


def _golden_b0_111() -> bool:
    s = b0_series(BlockStructure((1, 1, 1)), 12)
    expected = {(-k, k, 0): 1 for k in range(7)}
    expected.update({(0, -k, k): 1 for k in range(1, 7)})
    return s.terms() == expected


def _golden_blattner() -> bool:
    bs = BlockStructure((1, 1, 1))
    zero = (0, 0, 0)
    ok = all(blattner_direct(BlattnerQuery(bs, zero, (-k, k, 0))) == 1 for k in range(6))
    ok &= blattner_direct(BlattnerQuery(bs, zero, zero)) == 1
    ok &= blattner_direct(BlattnerQuery(bs, zero, (1, 0, 0))) == 0
    ok &= q_count((1, 0, -1), bs) == 1 and q_count((-1, 1, 0), bs) == 0
    return ok


def _golden_lr() -> bool:
    return (
        lr_coeff((1,), (1,), (2,)) == 1
        and lr_coeff((2, 1), (2, 1), (3, 2, 1)) == 2
        and tensor_decompose((3,), (2,), 2) == {Partition((5,)): 1, Partition((4, 1)): 1, Partition((3, 2)): 1}
    )


def _golden_adjoint() -> bool:
    for n in (3, 4):
        e1 = (1,) + (0,) * (n - 1)
        dual = (0,) * (n - 1) + (-1,)
        adj = (1,) + (0,) * (n - 2) + (-1,)
        if gen_tensor_decompose(e1, dual, n) != {adj: 1, (0,) * n: 1}:
            return False
    return True


def _golden_resolution_111() -> bool:
    bs = BlockStructure((1, 1, 1))
    res = resolution_of(bs, (5,), 12)
    return [(t.mu, t.nu, t.degree, t.sign) for t in res.terms] == [((5,), (), 0, 1)] and euler_character_check(bs, (5,), res)


def _golden_resolution_313() -> bool:
    bs = BlockStructure((3, 1, 3))
    res = resolution_of(bs, (0,), 26)
    got = [(tuple(t.mu), tuple(t.nu), t.degree, t.sign) for t in res.terms]
    return got == GOLDEN_313 and res.stabilized and euler_character_check(bs, (0,), res)


def _product_identities(depth: int = 8) -> bool:
    bs = BlockStructure((2, 2, 2))
    one = LaurentSeries.one(bs.N, depth)
    _, across = phi_m_split(bs)
    _, noncompact = positive_roots(bs)
    return (
        delta_product(across, bs.N, depth) * matrix_space_character(bs, depth) == one
        and geometric_inverse(noncompact, bs.N, depth) == howe_space_character(bs, depth)
        and b0_three_factor(bs, depth) == b0_series(bs, depth)
    )


def _hermitian_sweep(bound: int = 2) -> bool:
    for p, q in itertools.product(range(1, 4), repeat=2):
        bs = BlockStructure((p, q))
        ps, qs = list(partitions_in_box(p, bound)), list(partitions_in_box(q, bound))
        for dp, dq, ep, eq in itertools.product(ps, qs, ps, qs):
            a = blattner_direct(BlattnerQuery(bs, hermitian_weight(dp, dq, p, q), hermitian_weight(ep, eq, p, q)))
            if a != blattner_hermitian(p, q, dp, dq, ep, eq) or a != hermitian_blattner_as_genlr(dp, dq, ep, eq, p, q):
                return False
    return True


def _stable_sweep() -> bool:
    for blocks in ((1, 2, 1), (1, 3, 1)):
        bs = BlockStructure(blocks)
        weights = [w for w in itertools.product(range(-2, 3), repeat=bs.N)
                   if sum(map(abs, w)) <= 3 and is_dominant(w, bs, "k'")]
        for d, e in itertools.product(weights, repeat=2):
            if blattner_direct(BlattnerQuery(bs, d, e)) != blattner_two_nc_stable(bs, d, e):
                return False
    return True


def _b0_vs_direct() -> bool:
    for blocks in ((1, 1, 1), (1, 2, 1), (2, 1, 1)):
        bs = BlockStructure(blocks)
        s = b0_series(bs, 8)
        zero = (0,) * bs.N
        for eta in itertools.product(range(-4, 5), repeat=bs.N):
            if s.in_window(eta) and s.coefficient(eta) != blattner_direct(BlattnerQuery(bs, zero, eta)):
                return False
    return True


def _lr_oracle(bound: int = 4) -> bool:
    parts = list(partitions_up_to(bound, bound))
    for a, b in itertools.product(parts, repeat=2):
        if tensor_decompose(a, b, len(a) + len(b) or 1) != schur_oracle(a, b, len(a) + len(b) or 1):
            return False
    return True


def _genlr_oracle() -> bool:
    for n in (2, 3):
        ws = list(rational_weights(n, 3))
        for a, b in itertools.product(ws, repeat=2):
            try:
                got = gen_tensor_decompose(a, b, n)
            except UnsupportedRankError:
                continue
            if got != gen_tensor_oracle(a, b, n):
                return False
    return True


def _stable_epsilon() -> bool:
    for blocks in ((1, 2, 1), (1, 3, 2)):
        table = epsilon_extract(BlockStructure(blocks), 12)
        if table.diagnostics:
            return False
        for (lam, mu, nu), c in table.entries.items():
            w = RationalWeight(lam)
            if c != 1 or mu != w.plus or nu != w.minus:
                return False
    return True


QUICK: list[tuple[str, Callable[[], bool]]] = [
    ("b(0) golden terms at blocks 1,1,1", _golden_b0_111),
    ("Blattner golden values at blocks 1,1,1", _golden_blattner),
    ("LR golden values", _golden_lr),
    ("adjoint decomposition, n = 3, 4", _golden_adjoint),
    ("resolution of lambda = 5 at blocks 1,1,1", _golden_resolution_111),
    ("product identities at blocks 2,2,2, depth 8", _product_identities),
    ("Cauchy identity through degree 3, p, q <= 2", lambda: all(
        cauchy_identity_holds(p, q, 3) for p, q in itertools.product((1, 2), repeat=2))),
]

FULL: list[tuple[str, Callable[[], bool]]] = QUICK + [
    ("resolution of lambda = 0 at blocks 3,1,3", _golden_resolution_313),
    ("direct = hermitian = generalized LR, p, q <= 3, parts <= 2", _hermitian_sweep),
    ("direct = stable LR formula at blocks 1,2,1 and 1,3,1", _stable_sweep),
    ("b(0) coefficients = direct B(0, eta)", _b0_vs_direct),
    ("stable-range epsilon is a Kronecker delta", _stable_epsilon),
    ("LR tableaux = Schur oracle, sizes <= 4", _lr_oracle),
    ("hollow tables = Laurent-Schur oracle, n <= 3", _genlr_oracle),
    ("Cauchy identity through degree 4, p, q <= 3", lambda: all(
        cauchy_identity_holds(p, q, 4) for p, q in itertools.product((1, 2, 3), repeat=2))),
]


def run_checks(level: str = "quick") -> Iterator[tuple[str, bool, float]]:
    checks = {"quick": QUICK, "full": FULL}[level]
    for name, fn in checks:
        start = time.perf_counter()
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        yield name, ok, time.perf_counter() - start
