"""Enright resolution data read off from the series b(0).

For blocks ``(p, n, q)`` the coefficient of ``e^[[lam, mu, nu]]`` in b(0),
over the weights dominant for the Levi subalgebra, is the signed
multiplicity of the generalized Verma module ``M_{mu,nu}`` in the resolution
of the Howe-dual module indexed by ``lam``.  :func:`epsilon_extract` collects
those coefficients and :func:`resolution_of` orders one ``lam``-slice into
homological degrees.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .exceptions import OrderingHypothesisError, TruncationError
from .lr import schur_polynomial
from .partitions import Partition, RationalWeight
from .rootsys import BlockStructure, triple_decode, triple_encode
from .series import b0_series, dominant_terms

DEPTH_CEILING_ENV = "ENRIGHT_BLATTNER_DEPTH_CEILING"
DEFAULT_DEPTH_CEILING = 28

Key = tuple[tuple[int, ...], Partition, Partition]
Slice = dict[tuple[Partition, Partition], int]


def depth_ceiling() -> int:
    """Largest depth the automatic search may use (environment override)."""
    raw = os.environ.get(DEPTH_CEILING_ENV)
    if raw is None:
        return DEFAULT_DEPTH_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{DEPTH_CEILING_ENV} must be an integer, got {raw!r}") from None
    if value < 4:
        raise ValueError(f"{DEPTH_CEILING_ENV} must be at least 4")
    return value


def check_howe_conditions(lam: Sequence[int], bs: BlockStructure) -> RationalWeight:
    """Validate ``lam`` as a rank-n weight with ``l(lam+) <= p`` and ``l(lam-) <= q``."""
    p, n, q = bs.three_blocks
    lam = RationalWeight(lam)
    if len(lam) != n:
        raise ValueError(f"lambda must have {n} entries, got {tuple(lam)}")
    if len(lam.plus) > p or len(lam.minus) > q:
        raise ValueError(f"lambda = {tuple(lam)} needs l(lambda+) <= {p} and l(lambda-) <= {q}")
    return lam


@dataclass(frozen=True)
class EpsilonTable:
    bs: BlockStructure
    depth: int
    entries: dict[Key, int]
    diagnostics: tuple[tuple[tuple[int, ...], int], ...] = ()

    def slice(self, lam: Sequence[int]) -> Slice:
        lam = tuple(lam)
        return {(mu, nu): c for (l, mu, nu), c in self.entries.items() if l == lam}

    def lambdas(self) -> list[tuple[int, ...]]:
        return sorted({k[0] for k in self.entries}, reverse=True)


def epsilon_extract(bs: BlockStructure, depth: int) -> EpsilonTable:
    """Coefficients of b(0) at Levi-dominant ``[[lam, mu, nu]]`` inside the window.

    Levi-dominant terms that do not decode to partitions ``mu, nu`` and an
    admissible ``lam`` go to ``diagnostics`` instead.
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    p, n, q = bs.three_blocks
    entries: dict[Key, int] = {}
    odd = []
    for exponent, c in sorted(dominant_terms(b0_series(bs, depth), bs, "m'").items()):
        lam, mu, nu = triple_decode(exponent, bs)
        try:
            if min(mu) < 0 or min(nu) < 0:
                raise ValueError
            weight = check_howe_conditions(lam, bs)
        except ValueError:
            odd.append((exponent, c))
            continue
        entries[tuple(weight), Partition(mu), Partition(nu)] = c
    return EpsilonTable(bs, depth, entries, tuple(odd))


def _slice_at(bs: BlockStructure, lam: Sequence[int], depth: int) -> Slice:
    return epsilon_extract(bs, depth).slice(tuple(lam))


def _restrict(piece: Slice, lam: Sequence[int], bs: BlockStructure, depth: int) -> Slice:
    out = {}
    for (mu, nu), c in piece.items():
        exponent = triple_encode(lam, mu, nu, bs)
        if sum(abs(x) for x in exponent) <= depth:
            out[mu, nu] = c
    return out


def stabilization_check(bs: BlockStructure, lam: Sequence[int], depth: int) -> bool:
    """Whether the ``lam``-slice is the same at depths ``depth`` and ``depth + 2``."""
    if depth < 4:
        raise ValueError("depth must be at least 4")
    lam = tuple(check_howe_conditions(lam, bs))
    return _slice_at(bs, lam, depth) == _slice_at(bs, lam, depth + 2)


@dataclass(frozen=True)
class ResolutionTerm:
    mu: Partition
    nu: Partition
    sign: int
    degree: int
    multiplicity: int = 1

    @property
    def epsilon(self) -> int:
        return self.sign * self.multiplicity


@dataclass(frozen=True)
class Resolution:
    bs: BlockStructure
    lam: tuple[int, ...]
    terms: tuple[ResolutionTerm, ...]
    depth: int
    stabilized: bool
    notes: tuple[str, ...] = field(default=())

    def by_degree(self) -> dict[int, list[ResolutionTerm]]:
        out: dict[int, list[ResolutionTerm]] = defaultdict(list)
        for t in self.terms:
            out[t.degree].append(t)
        return dict(out)

    def to_dict(self) -> dict:
        p, _, q = self.bs.three_blocks
        return {
            "lambda": list(self.lam),
            "terms": [
                {
                    "mu": list(t.mu.padded(p)),
                    "nu": list(t.nu.padded(q)),
                    "degree": t.degree,
                    "sign": t.sign,
                    "multiplicity": t.multiplicity,
                }
                for t in self.terms
            ],
            "depth_used": self.depth,
            "stabilized": self.stabilized,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        p, _, q = self.bs.three_blocks
        lines = [f"lambda = ({','.join(map(str, self.lam))})  depth {self.depth}"
                 f"  {'stabilized' if self.stabilized else 'NOT stabilized'}"]
        for d, group in sorted(self.by_degree().items()):
            mods = " + ".join(
                (f"{t.multiplicity}*" if t.multiplicity > 1 else "")
                + f"M[({','.join(map(str, t.mu.padded(p)))}),({','.join(map(str, t.nu.padded(q)))})]"
                for t in group
            )
            lines.append(f"  degree {d}: {mods}")
        return "\n".join(lines)


def order_slice(piece: Slice) -> list[ResolutionTerm]:
    """Assign homological degrees by increasing ``|mu| + |nu|`` and check signs.

    Distinct total sizes get degrees 0, 1, 2, ... in order.  A term whose
    sign is not ``(-1)^degree`` raises :class:`OrderingHypothesisError`.
    """
    sizes = sorted({mu.size + nu.size for mu, nu in piece})
    degree_of = {s: d for d, s in enumerate(sizes)}
    out = []
    for (mu, nu), c in sorted(piece.items(), key=lambda kv: (kv[0][0].size + kv[0][1].size, kv[0])):
        d = degree_of[mu.size + nu.size]
        expected = 1 if d % 2 == 0 else -1
        if c * expected <= 0:
            raise OrderingHypothesisError(
                f"M[{tuple(mu)},{tuple(nu)}] has coefficient {c} at degree {d}; "
                f"expected sign {expected:+d}"
            )
        out.append(ResolutionTerm(mu, nu, expected, d, abs(c)))
    return out


def resolution_of(bs: BlockStructure, lam: Sequence[int], depth: int | str = "auto",
                  ceiling: int | None = None) -> Resolution:
    """The ordered resolution for ``lam``.

    With ``depth="auto"`` the depth doubles until the slice at depth ``D``
    equals the slice at ``2D`` (read from one series at ``2D``), up to
    ``ceiling``; failing that raises :class:`TruncationError`.
    """
    lam = tuple(check_howe_conditions(lam, bs))
    if depth == "auto":
        piece, used, stable = _auto_slice(bs, lam, ceiling if ceiling is not None else depth_ceiling())
    else:
        used = int(depth)
        if used < 4:
            raise ValueError("depth must be at least 4")
        piece = _slice_at(bs, lam, used)
        stable = piece == _slice_at(bs, lam, used + 2)
    if not piece:
        raise TruncationError(f"no terms for lambda = {lam} at depth {used}; increase the depth")
    terms = order_slice(piece)
    notes = ()
    if any(t.multiplicity > 1 for t in terms):
        notes = ("some coefficient has absolute value > 1",)
    return Resolution(bs, lam, tuple(terms), used, stable, notes)


def _auto_slice(bs: BlockStructure, lam: tuple[int, ...], ceiling: int) -> tuple[Slice, int, bool]:
    lam_w = RationalWeight(lam)
    # the degree-0 term [[lam, lam+, lam-]] sits at L1 distance 2(|lam+| + |lam-|)
    small = max(4, 2 * (lam_w.plus.size + lam_w.minus.size) + 2)
    while True:
        big = min(2 * small, ceiling)
        if big <= small:
            raise TruncationError(
                f"lambda = {lam} did not stabilize below depth {ceiling}; "
                f"raise {DEPTH_CEILING_ENV} or pass an explicit depth"
            )
        piece = _slice_at(bs, lam, big)
        if piece and _restrict(piece, lam, bs, small) == piece:
            return piece, big, True
        small = big


# -- Euler characteristic check -------------------------------------------------

def _geometric_matrix(p: int, q: int, degree: int) -> dict[tuple[int, ...], int]:
    """Monomials of ``prod_{i,j} 1 / (1 - x_i y_j)`` of total degree <= degree."""
    poly = {(0,) * (p + q): 1}
    for i in range(p):
        for j in range(q):
            nxt: dict[tuple[int, ...], int] = defaultdict(int)
            for mono, c in poly.items():
                cur = list(mono)
                while sum(cur) <= degree:
                    nxt[tuple(cur)] += c
                    cur[i] += 1
                    cur[p + j] += 1
            poly = dict(nxt)
    return poly


def _truncated_mul(a: dict, b: dict, degree: int) -> dict:
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for ma, ca in a.items():
        da = sum(ma)
        for mb, cb in b.items():
            if da + sum(mb) <= degree:
                out[tuple(x + y for x, y in zip(ma, mb))] += ca * cb
    return out


def resolution_character(resolution: Resolution, degree: int) -> dict[tuple[int, ...], int]:
    """``sum eps * s_mu(x) s_nu(y) * prod 1/(1 - x_i y_j)`` up to total degree ``degree``."""
    p, _, q = resolution.bs.three_blocks
    cauchy = _geometric_matrix(p, q, degree)
    total: dict[tuple[int, ...], int] = defaultdict(int)
    for t in resolution.terms:
        sx = schur_polynomial(t.mu, p)
        sy = schur_polynomial(t.nu, q)
        head = {a + b: ca * cb for a, ca in sx.items() for b, cb in sy.items()}
        for mono, c in _truncated_mul(head, cauchy, degree).items():
            total[mono] += t.epsilon * c
    return {m: c for m, c in total.items() if c}


def euler_character_check(bs: BlockStructure, lam: Sequence[int], resolution: Resolution,
                          degree: int | None = None) -> bool:
    """Check the alternating sum is a genuine character up to total degree ``degree``.

    All coefficients must be nonnegative.  When ``n = 1`` the result must
    also equal the independent count: monomials ``x^a y^b`` with
    ``|a| - |b| = lam``, each with coefficient one.
    """
    p, n, q = bs.three_blocks
    if degree is None:
        degree = resolution.depth // 2
    char = resolution_character(resolution, degree)
    if any(c < 0 for c in char.values()):
        return False
    if n == 1:
        target = lam[0]
        expected = {}
        for mono in _all_monomials(p + q, degree):
            if sum(mono[:p]) - sum(mono[p:]) == target:
                expected[mono] = 1
        return char == expected
    return True


def _all_monomials(k: int, degree: int):
    def rec(i: int, left: int):
        if i == k:
            yield ()
            return
        for e in range(left + 1):
            for rest in rec(i + 1, left - e):
                yield (e,) + rest
    yield from rec(0, degree)
