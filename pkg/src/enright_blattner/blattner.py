"""Blattner's formula in Type A, three ways.

``blattner_direct`` evaluates the alternating sum over the compact Weyl group
with the noncompact partition function ``q_count``.  ``blattner_hermitian``
(one noncompact simple root) and ``blattner_two_nc_stable`` (blocks
``(p, n, q)`` with ``n >= p + q``) are sign-free LR sums that must agree with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .genlr import branching, rational_lr_coeff
from .lr import lr_coeff, skew_decompose
from .partitions import Partition, join, partitions_of
from .rootsys import (
    DEFAULT_WEYL_CAP,
    BlockStructure,
    compact_weyl_group,
    is_dominant,
    positive_roots,
    rho,
    simple_coords,
    sorted_roots,
)

METHODS = ("direct", "hermitian", "stable-lr")


# -- the partition function Q ---------------------------------------------------

@lru_cache(maxsize=None)
def _root_intervals(bs: BlockStructure) -> tuple[tuple[tuple[int, int], ...], tuple[frozenset, ...]]:
    _, noncompact = positive_roots(bs)
    roots = sorted_roots(noncompact)
    # e_i - e_j covers simple coordinates i-1 .. j-2 (0-based)
    intervals = tuple((r.i - 1, r.j - 1) for r in roots)
    covered = []
    for k in range(len(intervals) + 1):
        covered.append(frozenset(x for a, b in intervals[k:] for x in range(a, b)))
    return intervals, tuple(covered)


def _q_counter(bs: BlockStructure):
    intervals, covered = _root_intervals(bs)

    @lru_cache(maxsize=None)
    def count(c: tuple[int, ...], k: int) -> int:
        if k == len(intervals):
            return 1 if not any(c) else 0
        reach = covered[k]
        if any(x and i not in reach for i, x in enumerate(c)):
            return 0
        a, b = intervals[k]
        total = 0
        top = min(c[a:b])
        for m in range(top + 1):
            if m:
                c = c[:a] + tuple(x - 1 for x in c[a:b]) + c[b:]
            total += count(c, k + 1)
        return total

    return count


@lru_cache(maxsize=None)
def _counter_for(bs: BlockStructure):
    return _q_counter(bs)


def q_count(xi: Sequence[int], bs: BlockStructure) -> int:
    """Number of ways to write ``xi`` as a sum of noncompact positive roots."""
    xi = tuple(xi)
    if len(xi) != bs.N:
        raise ValueError(f"weight has {len(xi)} coordinates, expected {bs.N}")
    if sum(xi) != 0:
        return 0
    c = simple_coords(xi)
    if any(x < 0 for x in c):
        return 0
    return _counter_for(bs)(c, 0)


# -- direct alternating sum --------------------------------------------------------

@dataclass(frozen=True)
class BlattnerQuery:
    bs: BlockStructure
    delta: tuple[int, ...]
    eta: tuple[int, ...]

    def __post_init__(self):
        delta = tuple(int(x) for x in self.delta)
        eta = tuple(int(x) for x in self.eta)
        if len(delta) != self.bs.N or len(eta) != self.bs.N:
            raise ValueError(f"delta and eta need {self.bs.N} coordinates")
        if not is_dominant(delta, self.bs, "k'"):
            raise ValueError(f"delta = {delta} is not dominant for the compact subalgebra")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "eta", eta)


@lru_cache(maxsize=64)
def _weyl_data(bs: BlockStructure, cap: int):
    two_rho = tuple(int(2 * x) for x in rho(bs, "compact"))
    elements = tuple((w.perm, w.sign) for w in compact_weyl_group(bs, cap))
    return two_rho, elements


def blattner_direct(query: BlattnerQuery, cap: int = DEFAULT_WEYL_CAP) -> int:
    """``sum_w (-1)^l(w) Q(w(delta + rho_c) - rho_c - eta)``.

    Raw integer; it may be negative when the Hecht-Schmid hypothesis fails.
    """
    bs = query.bs
    two_rho, elements = _weyl_data(bs, cap)
    # W_k permutes coordinates and rho_c sums to zero, so every argument of Q has this sum
    if sum(query.delta) != sum(query.eta):
        return 0
    shifted = tuple(2 * d + r for d, r in zip(query.delta, two_rho))
    base = tuple(r + 2 * e for r, e in zip(two_rho, query.eta))
    total = 0
    for perm, sign in elements:
        moved = [0] * bs.N
        for i, x in enumerate(shifted):
            moved[perm[i]] = x
        xi = tuple((m - b) // 2 for m, b in zip(moved, base))
        value = q_count(xi, bs)
        if value:
            total += sign * value
    return total


def check_hs_hypothesis(bs: BlockStructure, eta: Sequence[int]) -> bool:
    """Whether ``eta + rho_c - rho_nc`` is dominant regular for sl_N."""
    shifted = [e + a - b for e, a, b in zip(eta, rho(bs, "compact"), rho(bs, "noncompact"))]
    return all(x > y for x, y in zip(shifted, shifted[1:]))


# -- one noncompact simple root -----------------------------------------------------

def hermitian_weight(part_p: Sequence[int], part_q: Sequence[int], p: int, q: int) -> tuple[int, ...]:
    """Standard coordinates of the K-type ``F^part_p (x) F^part_q`` for SU(p, q)."""
    part_p, part_q = Partition(part_p), Partition(part_q)
    return part_p.padded(p) + tuple(-x for x in reversed(part_q.padded(q)))


def blattner_hermitian(p: int, q: int, delta_p: Sequence[int], delta_q: Sequence[int],
                       eta_p: Sequence[int], eta_q: Sequence[int]) -> int:
    """``sum_xi c^{delta_p}_{xi, eta_p} c^{delta_q}_{xi, eta_q}`` over xi with l(xi) <= min(p, q)."""
    delta_p, delta_q = Partition(delta_p), Partition(delta_q)
    eta_p, eta_q = Partition(eta_p), Partition(eta_q)
    d = delta_p.size - eta_p.size
    if d < 0 or d != delta_q.size - eta_q.size:
        return 0
    total = 0
    for xi in partitions_of(d, min(p, q)):
        a = lr_coeff(xi, eta_p, delta_p)
        if a:
            total += a * lr_coeff(xi, eta_q, delta_q)
    return total


# -- two noncompact simple roots, stable range --------------------------------------

def _lr_completions(base: tuple[int, ...], target: tuple[int, ...]) -> dict[Partition, int]:
    """Partitions ``x`` with ``F^target`` inside ``F^base (x) F^x``, for rational base/target of one rank."""
    shift = max(0, -min(base))
    top = tuple(t + shift for t in target)
    if min(top) < 0:
        return {}
    return skew_decompose(top, tuple(b + shift for b in base))


def blattner_two_nc_stable(bs: BlockStructure, delta: Sequence[int], eta: Sequence[int]) -> int:
    """Sign-free formula for blocks ``(p, n, q)`` with ``n >= p + q``.

    Sums ``c[kappa; mu, nu] * c[eta_n; delta_n, lam] * c[eta_p; mu, lam+] * c[eta_q; nu, lam-]``
    where ``kappa`` is the outer part of ``delta`` and ``c[kappa; mu, nu]`` its
    branching to GL_p x GL_q.  ``mu, nu`` run over every highest weight in that
    branching, not only over partitions.
    """
    p, n, q = bs.three_blocks
    if n < p + q:
        raise ValueError(f"stable formula needs n >= p + q, got blocks {bs.block_sizes}")
    delta, eta = tuple(delta), tuple(eta)
    for name, w in (("delta", delta), ("eta", eta)):
        if len(w) != bs.N or not is_dominant(w, bs, "k'"):
            raise ValueError(f"{name} = {w} is not a dominant weight for the compact subalgebra")
    delta_n = delta[p:p + n]
    kappa = delta[:p] + delta[p + n:]
    eta_n = eta[p:p + n]
    eta_p = tuple(-x for x in reversed(eta[:p]))
    eta_q = eta[p + n:]
    total = 0
    for (first, second), c_branch in branching(kappa, p, q).items():
        mu = tuple(-x for x in reversed(first))
        nu = second
        plus_parts = _lr_completions(mu, eta_p)
        if not plus_parts:
            continue
        minus_parts = _lr_completions(nu, eta_q)
        for lam_plus, c_p in plus_parts.items():
            for lam_minus, c_q in minus_parts.items():
                lam = join(lam_plus, lam_minus, n)
                c_n = rational_lr_coeff(delta_n, lam, eta_n, n)
                if c_n:
                    total += c_branch * c_p * c_q * c_n
    return total


def blattner(bs: BlockStructure, delta: Sequence[int], eta: Sequence[int], method: str = "direct",
             cap: int = DEFAULT_WEYL_CAP) -> int:
    """Evaluate ``B(delta, eta)`` by the named method."""
    if method == "direct":
        return blattner_direct(BlattnerQuery(bs, tuple(delta), tuple(eta)), cap)
    if method == "hermitian":
        if len(bs.block_sizes) != 2:
            raise ValueError("the hermitian method needs blocks (p, q)")
        p, q = bs.block_sizes
        delta, eta = tuple(delta), tuple(eta)
        parts = []
        for w in (delta, eta):
            first, second = w[:p], w[p:]
            if min(first) < 0 or max(second) > 0:
                raise ValueError(f"{w} is not of the form (partition, -reversed partition)")
            parts.append((Partition(first), Partition(-x for x in reversed(second))))
        (dp, dq), (ep, eq) = parts
        return blattner_hermitian(p, q, dp, dq, ep, eq)
    if method == "stable-lr":
        return blattner_two_nc_stable(bs, delta, eta)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
