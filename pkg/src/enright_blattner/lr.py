"""Littlewood-Richardson coefficients and Schur polynomials.

``lr_coeff`` counts LR skew tableaux by backtracking.  ``schur_oracle`` is an
unrelated second route: multiply Schur polynomials monomial by monomial and
peel off leading terms.  The two are compared exhaustively in the tests.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Partition, partitions_of, partitions_up_to


def _fillings(outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...] | None) -> Iterator[tuple[int, ...]]:
    """Contents of the LR tableaux of shape outer/inner.

    When ``content`` is given, only fillings with exactly that content are
    produced (and the search is pruned accordingly).
    """
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))
    if content is not None:
        letters = len(content)
    else:
        letters = rows
    counts = [0] * (letters + 1)
    grid: list[list[int]] = [[0] * outer[r] for r in range(rows)]

    def fill_row(r: int) -> Iterator[tuple[int, ...]]:
        if r == rows:
            if content is None or tuple(counts[1:]) == content:
                yield tuple(c for c in counts[1:] if c)
            return
        yield from fill_cell(r, outer[r] - 1)

    def fill_cell(r: int, c: int) -> Iterator[tuple[int, ...]]:
        if c < inner[r]:
            yield from fill_row(r + 1)
            return
        # row weakly increases left to right, so moving left entries can only drop
        hi = grid[r][c + 1] if c + 1 < outer[r] else min(r + 1, letters)
        lo = 1
        if r > 0 and c < outer[r - 1] and c >= inner[r - 1]:
            lo = grid[r - 1][c] + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            if content is not None and counts[v] + 1 > content[v - 1]:
                continue
            counts[v] += 1
            grid[r][c] = v
            yield from fill_cell(r, c - 1)
            counts[v] -= 1

    yield from fill_row(0)


@lru_cache(maxsize=None)
def _lr(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    if alpha.size + beta.size != gamma.size:
        return 0
    if not gamma.contains(alpha) or not gamma.contains(beta):
        return 0
    if not beta:
        return 1 if alpha == gamma else 0
    if not alpha:
        return 1 if beta == gamma else 0
    return sum(1 for _ in _fillings(tuple(gamma), tuple(alpha), tuple(beta)))


def lr_coeff(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> int:
    """The Littlewood-Richardson coefficient ``c^gamma_{alpha, beta}``."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    # the tableau search is cheaper with the smaller content
    if beta.size > alpha.size:
        alpha, beta = beta, alpha
    return _lr(alpha, beta, gamma)


@lru_cache(maxsize=None)
def _skew(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    if not outer.contains(inner):
        return ()
    tally: dict[Partition, int] = defaultdict(int)
    for content in _fillings(tuple(outer), tuple(inner), None):
        tally[Partition(content)] += 1
    return tuple(sorted(tally.items()))


def skew_decompose(outer: Sequence[int], inner: Sequence[int]) -> dict[Partition, int]:
    """Schur expansion of the skew function ``s_{outer/inner}``: ``{nu: c^outer_{inner, nu}}``."""
    return dict(_skew(Partition(outer), Partition(inner)))


def tensor_decompose(alpha: Sequence[int], beta: Sequence[int], k: int) -> dict[Partition, int]:
    """``F^alpha_k (x) F^beta_k`` as ``{gamma: multiplicity}``."""
    alpha, beta = Partition(alpha), Partition(beta)
    if len(alpha) > k or len(beta) > k:
        raise ValueError(f"partitions must have at most {k} parts")
    bound = min(k, len(alpha) + len(beta))
    first = (alpha[0] if alpha else 0) + (beta[0] if beta else 0)
    out = {}
    for gamma in partitions_of(alpha.size + beta.size, bound, first):
        c = lr_coeff(alpha, beta, gamma)
        if c:
            out[gamma] = c
    return out


# -- Schur polynomials -------------------------------------------------------

def _interlacing(lam: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    """Partitions mu (padded to k-1) with lam_i >= mu_i >= lam_{i+1}."""
    lam = lam + (0,) * (k - len(lam))

    def rec(i: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == k - 1:
            yield acc
            return
        for m in range(lam[i + 1], lam[i] + 1):
            yield from rec(i + 1, acc + (m,))

    yield from rec(0, ())


@lru_cache(maxsize=None)
def _schur(lam: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    if len(lam) > k:
        return ()
    if k == 0:
        return (((), 1),)
    if k == 1:
        return (((lam[0] if lam else 0,), 1),)
    total = sum(lam)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for mu in _interlacing(lam, k):
        last = total - sum(mu)
        for mono, c in _schur(tuple(Partition(mu)), k - 1):
            out[mono + (last,)] += c
    return tuple(sorted(out.items()))


def schur_polynomial(weight: Sequence[int], k: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of the character of ``F^weight_k``.

    ``weight`` is a partition with at most ``k`` parts, or a weakly decreasing
    integer k-tuple (a rational weight); the latter is handled by shifting by
    a power of the determinant.
    """
    weight = tuple(int(x) for x in weight)
    if weight and min(weight) < 0:
        if len(weight) != k:
            raise ValueError(f"rational weight {weight} must have exactly {k} entries")
        shift = -weight[-1]
        base = _schur(tuple(Partition(x + shift for x in weight)), k)
        return {tuple(e - shift for e in mono): c for mono, c in base}
    return dict(_schur(tuple(Partition(weight)), k))


def poly_mul(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for ma, ca in a.items():
        for mb, cb in b.items():
            out[tuple(x + y for x, y in zip(ma, mb))] += ca * cb
    return {m: c for m, c in out.items() if c}


def schur_expand(poly: dict[tuple[int, ...], int], k: int) -> dict[tuple[int, ...], int]:
    """Re-expand a symmetric Laurent polynomial in ``k`` variables in the Schur basis.

    Keys of the result are weakly decreasing k-tuples (possibly negative).
    """
    poly = {m: c for m, c in poly.items() if c}
    out = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise ValueError("polynomial is not symmetric")
        out[lead] = c
        for mono, d in schur_polynomial(lead, k).items():
            v = poly.get(mono, 0) - c * d
            if v:
                poly[mono] = v
            else:
                poly.pop(mono, None)
    return out


def schur_oracle(alpha: Sequence[int], beta: Sequence[int], k: int) -> dict[Partition, int]:
    """Same contract as :func:`tensor_decompose`, by explicit polynomial arithmetic."""
    alpha, beta = Partition(alpha), Partition(beta)
    product = poly_mul(schur_polynomial(alpha, k), schur_polynomial(beta, k))
    if not product:
        return {}
    return {Partition(g): c for g, c in schur_expand(product, k).items()}


def cauchy_side(p: int, q: int, degree_bound: int) -> dict[Partition, int]:
    """K-types of C[M_{p,q}] up to the given degree, each with multiplicity one."""
    return {xi: 1 for xi in partitions_up_to(degree_bound, min(p, q))}


def matrix_monomials(p: int, q: int, degree: int) -> dict[tuple[int, ...], int]:
    """``prod_{i,j} 1/(1 - x_i y_j)`` through ``x``-degree ``degree``, by counting p x q matrices.

    Keys are ``x``-exponents followed by ``y``-exponents.
    """
    out: dict[tuple[int, ...], int] = defaultdict(int)
    cells = [(i, j) for i in range(p) for j in range(q)]

    def rec(k: int, left: int, expo: list[int]) -> None:
        if k == len(cells):
            out[tuple(expo)] += 1
            return
        i, j = cells[k]
        for m in range(left + 1):
            expo[i] += m
            expo[p + j] += m
            rec(k + 1, left - m, expo)
            expo[i] -= m
            expo[p + j] -= m

    rec(0, degree, [0] * (p + q))
    return dict(out)


def cauchy_sum(p: int, q: int, degree: int) -> dict[tuple[int, ...], int]:
    """``sum_xi s_xi(x) s_xi(y)`` over ``l(xi) <= min(p, q)``, ``|xi| <= degree``."""
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for xi in cauchy_side(p, q, degree):
        sx, sy = schur_polynomial(xi, p), schur_polynomial(xi, q)
        for a, ca in sx.items():
            for b, cb in sy.items():
                out[a + b] += ca * cb
    return dict(out)


def cauchy_identity_holds(p: int, q: int, degree: int) -> bool:
    """Both sides of Cauchy's identity agree through the given degree."""
    return matrix_monomials(p, q, degree) == cauchy_sum(p, q, degree)
