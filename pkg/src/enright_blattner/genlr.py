"""Tensor product multiplicities for rational GL_n representations.

The main route sums products of six classical LR coefficients over hollow
3x3 contingency tables::

               alpha-   beta-   gamma+
    alpha+  [    0       t12     t13  ]
    beta+   [   t21       0      t23  ]
    gamma-  [   t31      t32      0   ]

Each row and column contributes ``c^{label}_{entry, entry}``.  The sum is a
product of universal characters, so it is only exact when every gamma it
produces satisfies ``l(gamma+) + l(gamma-) <= n``; other inputs raise
:class:`UnsupportedRankError`.

``rational_lr_coeff`` is a rank-exact alternative that twists by powers of the
determinant to reduce to a classical LR coefficient.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .exceptions import UnsupportedRankError
from .lr import lr_coeff, poly_mul, schur_expand, schur_polynomial, skew_decompose, tensor_decompose
from .partitions import Partition, RationalWeight, join, subpartitions


@dataclass(frozen=True)
class HollowTable:
    t12: Partition
    t13: Partition
    t21: Partition
    t23: Partition
    t31: Partition
    t32: Partition

    def row_sizes(self) -> tuple[int, int, int]:
        return (self.t12.size + self.t13.size, self.t21.size + self.t23.size,
                self.t31.size + self.t32.size)

    def column_sizes(self) -> tuple[int, int, int]:
        return (self.t21.size + self.t31.size, self.t12.size + self.t32.size,
                self.t13.size + self.t23.size)


def _weight(w: Sequence[int], n: int) -> RationalWeight:
    w = RationalWeight(w)
    if len(w) != n:
        raise ValueError(f"weight {tuple(w)} does not have rank {n}")
    return w


def _product(a: Partition, b: Partition) -> dict[Partition, int]:
    """Classical ``s_a s_b`` with no length truncation."""
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    return tensor_decompose(a, b, len(a) + len(b))


def hollow_tables(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> Iterator[tuple[HollowTable, int]]:
    """Tables with a nonzero product for fixed rational ``alpha, beta, gamma``, with that product."""
    alpha, beta, gamma = RationalWeight(alpha), RationalWeight(beta), RationalWeight(gamma)
    ap, am = alpha.plus, alpha.minus
    bp, bm = beta.plus, beta.minus
    gp, gm = gamma.plus, gamma.minus
    for t12 in subpartitions(ap):
        if not bm.contains(t12):
            continue
        for t13, c_row1 in skew_decompose(ap, t12).items():
            if not gp.contains(t13):
                continue
            for t31 in subpartitions(gm):
                if not am.contains(t31):
                    continue
                for t32, c_row3 in skew_decompose(gm, t31).items():
                    c_col2 = lr_coeff(t12, t32, bm)
                    if not c_col2:
                        continue
                    for t21, c_col1 in skew_decompose(am, t31).items():
                        for t23, c_col3 in skew_decompose(gp, t13).items():
                            c_row2 = lr_coeff(t21, t23, bp)
                            if c_row2:
                                table = HollowTable(t12, t13, t21, t23, t31, t32)
                                yield table, c_row1 * c_row2 * c_row3 * c_col1 * c_col2 * c_col3


def universal_product(alpha: Sequence[int], beta: Sequence[int]) -> dict[tuple[Partition, Partition], int]:
    """Hollow-table expansion of the product, keyed by ``(gamma+, gamma-)``, with no rank applied."""
    alpha, beta = RationalWeight(alpha), RationalWeight(beta)
    ap, am = alpha.plus, alpha.minus
    bp, bm = beta.plus, beta.minus
    out: dict[tuple[Partition, Partition], int] = defaultdict(int)
    for t12 in subpartitions(ap):
        if not bm.contains(t12):
            continue
        t13s = skew_decompose(ap, t12)
        t32s = skew_decompose(bm, t12)
        for t21 in subpartitions(bp):
            if not am.contains(t21):
                continue
            t23s = skew_decompose(bp, t21)
            t31s = skew_decompose(am, t21)
            for t13, a in t13s.items():
                for t23, b in t23s.items():
                    plus = _product(t13, t23)
                    for t31, c in t31s.items():
                        for t32, d in t32s.items():
                            weight = a * b * c * d
                            for gm, e in _product(t31, t32).items():
                                for gp, f in plus.items():
                                    out[gp, gm] += weight * e * f
    return dict(out)


def _stable(alpha: RationalWeight, beta: RationalWeight, n: int) -> bool:
    return n >= len(alpha.plus) + len(alpha.minus) + len(beta.plus) + len(beta.minus)


def gen_tensor_decompose(alpha: Sequence[int], beta: Sequence[int], n: int) -> dict[RationalWeight, int]:
    """``F^alpha_n (x) F^beta_n`` as ``{gamma: multiplicity}`` via hollow tables."""
    alpha, beta = _weight(alpha, n), _weight(beta, n)
    if n == 1:
        # GL_1 characters multiply
        return {RationalWeight((alpha[0] + beta[0],)): 1}
    out = {}
    for (gp, gm), c in universal_product(alpha, beta).items():
        if len(gp) + len(gm) > n:
            raise UnsupportedRankError(
                f"gamma = [{tuple(gp)}, {tuple(gm)}] does not fit at rank {n}; "
                "hollow tables need modification rules here"
            )
        out[join(gp, gm, n)] = c
    return out


def gen_lr_coeff(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int], n: int) -> int:
    """Multiplicity of ``F^gamma_n`` in ``F^alpha_n (x) F^beta_n`` via hollow tables."""
    alpha, beta, gamma = _weight(alpha, n), _weight(beta, n), _weight(gamma, n)
    if n == 1 or not _stable(alpha, beta, n):
        # raises if any produced gamma would need a modification rule
        return gen_tensor_decompose(alpha, beta, n).get(gamma, 0)
    if sum(alpha) + sum(beta) != sum(gamma):
        return 0
    return sum(c for _, c in hollow_tables(alpha, beta, gamma))


def hermitian_blattner_as_genlr(delta_p: Sequence[int], delta_q: Sequence[int],
                                eta_p: Sequence[int], eta_q: Sequence[int], p: int, q: int) -> int:
    """Blattner multiplicity for SU(p, q) as one generalized LR coefficient.

    The coefficient of ``[eta_p, eta_q]`` in ``delta_p (x) [0, delta_q]`` at rank p + q.
    """
    n = p + q
    delta_p, delta_q = Partition(delta_p), Partition(delta_q)
    eta_p, eta_q = Partition(eta_p), Partition(eta_q)
    if len(delta_p) > p or len(eta_p) > p or len(delta_q) > q or len(eta_q) > q:
        raise ValueError("partition lengths exceed the block sizes")
    return gen_lr_coeff(join(delta_p, (), n), join((), delta_q, n), join(eta_p, eta_q, n), n)


# -- rank-exact routes ---------------------------------------------------------

def rational_lr_coeff(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int], n: int) -> int:
    """Same value as :func:`gen_lr_coeff`, exact at every rank.

    Twisting ``F^alpha`` by ``det^a`` shifts every entry by ``a``, so the
    question reduces to a classical coefficient with partitions of length <= n.
    """
    alpha, beta, gamma = _weight(alpha, n), _weight(beta, n), _weight(gamma, n)
    a = max(0, -alpha[-1])
    b = max(0, -beta[-1])
    shifted = [x + a + b for x in gamma]
    if shifted[-1] < 0:
        return 0
    return lr_coeff([x + a for x in alpha], [x + b for x in beta], shifted)


def branching(kappa: Sequence[int], p: int, q: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    """Restriction of ``F^kappa_{p+q}`` to block-diagonal ``GL_p x GL_q``.

    Keys are ``(first, second)`` highest weights in standard coordinates.
    """
    kappa = _weight(kappa, p + q)
    a = max(0, -kappa[-1])
    outer = Partition(x + a for x in kappa)
    out = {}
    for first in subpartitions(outer):
        if len(first) > p:
            continue
        for second, c in skew_decompose(outer, first).items():
            if len(second) > q:
                continue
            key = (tuple(x - a for x in first.padded(p)), tuple(x - a for x in second.padded(q)))
            out[key] = c
    return out


def gen_tensor_oracle(alpha: Sequence[int], beta: Sequence[int], n: int) -> dict[RationalWeight, int]:
    """Decomposition by multiplying Laurent-Schur characters and re-expanding."""
    alpha, beta = _weight(alpha, n), _weight(beta, n)
    product = poly_mul(schur_polynomial(alpha, n), schur_polynomial(beta, n))
    return {RationalWeight(g): c for g, c in schur_expand(product, n).items()}


def weyl_dimension(weight: Sequence[int]) -> int:
    """Dimension of ``F^weight_n`` by the Weyl dimension formula."""
    w = tuple(weight)
    num = Fraction(1)
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            num *= Fraction(w[i] - w[j] + j - i, j - i)
    return int(num)
