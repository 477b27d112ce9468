"""Truncated formal series in ``e^weight`` for type A weights.

Every series here is supported on ``apex - Q+``, where ``Q+`` is the monoid
spanned by the positive roots.  Coefficients are stored densely in a box of
simple-root coordinates: the entry at index ``c`` is the coefficient of
``e^(apex - xi)`` where ``xi`` has simple coordinates ``c``.  The box is
closed under going down componentwise, so products and quotients by
``1 - e^-alpha`` computed inside it are exact.

The *window* of a depth-``D`` series is ``|apex - xi|_1 <= D``.  The box with
side ``D // 2`` contains it, since a zero-sum vector of L1 norm ``D`` has
partial sums bounded by ``D / 2``.  Only window terms are ever reported, and
asking for a coefficient outside the window raises :class:`TruncationError`.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .exceptions import TruncationError
from .lr import schur_polynomial
from .partitions import partitions_up_to
from .rootsys import BlockStructure, Root, is_dominant, phi_m_split, positive_roots, simple_coords

# switch to Python ints well before int64 could wrap
_INT64_GUARD = 2 ** 61


def root_coords(root: Root, N: int) -> tuple[int, ...]:
    """Simple-root coordinates of a positive root ``e_i - e_j``."""
    if not root.positive:
        raise ValueError(f"{root} is not a positive root")
    return tuple(1 if root.i - 1 <= k < root.j - 1 else 0 for k in range(N - 1))


def _exponents_from_coords(apex: np.ndarray, coords: np.ndarray) -> np.ndarray:
    """Rows of ``apex - xi`` for rows ``coords`` of simple coordinates of ``xi``."""
    zeros = np.zeros((coords.shape[0], 1), dtype=np.int64)
    padded = np.concatenate([zeros, coords.astype(np.int64), zeros], axis=1)
    return apex[None, :] - (padded[:, 1:] - padded[:, :-1])


class LaurentSeries:
    """A series ``sum_xi a_xi e^(apex - xi)`` with ``xi`` in the positive root cone.

    Instances are immutable; every operation returns a new series.
    """

    __slots__ = ("N", "depth", "apex", "_data")

    def __init__(self, N: int, depth: int, apex: Sequence[int] | None = None, data: np.ndarray | None = None):
        if N < 2:
            raise ValueError("need N >= 2")
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        self.N = int(N)
        self.depth = int(depth)
        self.apex = tuple(int(x) for x in apex) if apex is not None else (0,) * self.N
        if len(self.apex) != self.N:
            raise ValueError(f"apex needs {self.N} coordinates")
        shape = (self.side + 1,) * (self.N - 1)
        if data is None:
            data = np.zeros(shape, dtype=np.int64)
        elif data.shape != shape:
            raise ValueError(f"data has shape {data.shape}, expected {shape}")
        data.flags.writeable = False
        self._data = data

    # -- construction -----------------------------------------------------

    @property
    def side(self) -> int:
        return self.depth // 2

    @classmethod
    def one(cls, N: int, depth: int) -> "LaurentSeries":
        data = np.zeros((depth // 2 + 1,) * (N - 1), dtype=np.int64)
        data[(0,) * (N - 1)] = 1
        return cls(N, depth, None, data)

    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], int], N: int, depth: int,
                   apex: Sequence[int] | None = None) -> "LaurentSeries":
        """Build from ``{exponent: coefficient}``; terms beyond the box are dropped."""
        apex = tuple(apex) if apex is not None else (0,) * N
        side = depth // 2
        data = np.zeros((side + 1,) * (N - 1), dtype=object)
        for exponent, c in terms.items():
            if len(exponent) != N:
                raise ValueError(f"exponent {tuple(exponent)} does not have {N} coordinates")
            diff = [a - e for a, e in zip(apex, exponent)]
            if sum(diff) != 0:
                raise ValueError(f"exponent {tuple(exponent)} is not in apex - Q+")
            idx = simple_coords(diff)
            if any(x < 0 for x in idx):
                raise ValueError(f"exponent {tuple(exponent)} is not in apex - Q+")
            if all(x <= side for x in idx):
                data[idx] += c
        return cls(N, depth, apex, _narrow(data))

    # -- access -------------------------------------------------------------

    @property
    def data(self) -> np.ndarray:
        """Read-only dense coefficient box."""
        return self._data

    def in_window(self, xi: Sequence[int]) -> bool:
        return sum(abs(a - x) for a, x in zip(self.apex, xi)) <= self.depth

    def coefficient(self, xi: Sequence[int]) -> int:
        xi = tuple(int(x) for x in xi)
        if len(xi) != self.N:
            raise ValueError(f"weight has {len(xi)} coordinates, expected {self.N}")
        if not self.in_window(xi):
            raise TruncationError(
                f"exponent {xi} lies outside the depth-{self.depth} window around {self.apex}"
            )
        diff = [a - x for a, x in zip(self.apex, xi)]
        if sum(diff) != 0:
            return 0
        idx = simple_coords(diff)
        if any(x < 0 for x in idx):
            return 0
        return int(self._data[idx])

    def terms(self) -> dict[tuple[int, ...], int]:
        """Nonzero coefficients inside the window, keyed by exponent."""
        coords = np.argwhere(self._data != 0)
        if not len(coords):
            return {}
        exps = _exponents_from_coords(np.array(self.apex, dtype=np.int64), coords)
        l1 = np.abs(exps - np.array(self.apex, dtype=np.int64)[None, :]).sum(axis=1)
        out = {}
        for row, idx, dist in zip(exps, coords, l1):
            if dist <= self.depth:
                out[tuple(int(x) for x in row)] = int(self._data[tuple(idx)])
        return out

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Window terms ordered by height of ``apex - xi``, then exponent."""
        def key(item):
            diff = [a - x for a, x in zip(self.apex, item[0])]
            return sum(simple_coords(diff)), item[0]
        return sorted(self.terms().items(), key=key)

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "LaurentSeries") -> None:
        if not isinstance(other, LaurentSeries):
            raise TypeError(f"cannot combine a series with {type(other).__name__}")
        if (self.N, self.depth) != (other.N, other.depth):
            raise ValueError("series have different rank or depth")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check_compatible(other)
        if self.apex != other.apex:
            raise ValueError("series have different apexes")
        return LaurentSeries(self.N, self.depth, self.apex, _narrow(_wide(self._data, other._data) + other._data))

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.N, self.depth, self.apex, _narrow(-_wide(self._data)))

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        """Truncated product; cost is (support of the sparser factor) x (box size)."""
        self._check_compatible(other)
        a, b = self, other
        if np.count_nonzero(a._data) > np.count_nonzero(b._data):
            a, b = b, a
        side = self.side
        support = np.argwhere(a._data != 0)
        bound = _max_abs(a._data) * _max_abs(b._data) * max(1, len(support))
        dtype = object if bound >= _INT64_GUARD else np.int64
        acc = np.zeros(b._data.shape, dtype=dtype)
        src_data = b._data.astype(dtype)
        for idx in support:
            c = a._data[tuple(idx)]
            dst = tuple(slice(k, side + 1) for k in idx)
            src = tuple(slice(0, side + 1 - k) for k in idx)
            acc[dst] += c * src_data[src]
        apex = tuple(x + y for x, y in zip(a.apex, b.apex))
        return LaurentSeries(self.N, self.depth, apex, _narrow(acc))

    def times_binomial(self, coords: Sequence[int]) -> "LaurentSeries":
        """Multiply by ``1 - e^(-beta)``, ``beta`` given in simple coordinates."""
        data = _wide(self._data).copy()
        _shift_add(data, coords, -1)
        return LaurentSeries(self.N, self.depth, self.apex, _narrow(data))

    def over_binomial(self, coords: Sequence[int]) -> "LaurentSeries":
        """Divide by ``1 - e^(-beta)``, i.e. multiply by the geometric series."""
        if not any(coords):
            raise ZeroDivisionError("1 - e^0 is not invertible")
        data = _wide(self._data).copy()
        # prod_{s = 1, 2, 4, ...} (1 + x^s) = 1 / (1 - x) modulo the box
        step = 1
        while step <= self.side:
            data = _widen_if_needed(data)
            _shift_add(data, [k * step for k in coords], 1)
            step *= 2
        return LaurentSeries(self.N, self.depth, self.apex, _narrow(data))

    def restrict(self, keep) -> "LaurentSeries":
        """Zero every term whose exponent fails ``keep(exponent)``."""
        data = np.array(self._data, copy=True)
        coords = np.argwhere(data != 0)
        if len(coords):
            exps = _exponents_from_coords(np.array(self.apex, dtype=np.int64), coords)
            for row, idx in zip(exps, coords):
                if not keep(tuple(int(x) for x in row)):
                    data[tuple(idx)] = 0
        return LaurentSeries(self.N, self.depth, self.apex, data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.N, self.depth, self.apex) == (other.N, other.depth, other.apex) and bool(
            np.array_equal(self._data, other._data)
        )

    def __hash__(self):
        return hash((self.N, self.depth, self.apex, tuple(sorted(self.terms().items()))))

    def __repr__(self) -> str:
        return f"LaurentSeries(N={self.N}, depth={self.depth}, apex={self.apex}, terms={len(self.terms())})"

    # -- output -------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps([{"exponent": list(e), "coeff": c} for e, c in self.sorted_terms()])

    def to_text(self) -> str:
        lines = [f"{c:+d} e^({','.join(map(str, e))})" for e, c in self.sorted_terms()]
        return "\n".join(lines)


def _wide(*arrays: np.ndarray) -> np.ndarray:
    """First array, as object dtype if any input is object or near the int64 limit."""
    first = arrays[0]
    if any(a.dtype == object for a in arrays) or any(_too_big(a) for a in arrays):
        return first.astype(object)
    return first


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return int(np.abs(a).max())


def _too_big(a: np.ndarray) -> bool:
    return a.dtype != object and _max_abs(a) >= _INT64_GUARD


def _widen_if_needed(a: np.ndarray) -> np.ndarray:
    return a.astype(object) if _too_big(a) else a


def _narrow(a: np.ndarray) -> np.ndarray:
    if a.dtype != object:
        return a
    if _max_abs(a) < _INT64_GUARD:
        return a.astype(np.int64)
    return a


def _shift_add(data: np.ndarray, coords: Sequence[int], sign: int) -> None:
    """In place: ``data += sign * (data shifted up by coords)``, cut to the box."""
    side = data.shape[0] - 1
    if any(k > side for k in coords):
        return
    dst = tuple(slice(k, side + 1) for k in coords)
    src = tuple(slice(0, side + 1 - k) for k in coords)
    moved = data[src].copy()
    if sign > 0:
        data[dst] += moved
    else:
        data[dst] -= moved


# -- building blocks ----------------------------------------------------------

def delta_product(roots: Iterable[Root], N: int, depth: int) -> LaurentSeries:
    """``prod (1 - e^-alpha)`` over the given positive roots."""
    s = LaurentSeries.one(N, depth)
    for r in sorted(roots):
        s = s.times_binomial(root_coords(r, N))
    return s


def geometric_inverse(roots: Iterable[Root], N: int, depth: int) -> LaurentSeries:
    """``prod 1 / (1 - e^-alpha)`` over the given positive roots."""
    s = LaurentSeries.one(N, depth)
    for r in sorted(roots):
        s = s.over_binomial(root_coords(r, N))
    return s


@lru_cache(maxsize=16)
def b0_series(bs: BlockStructure, depth: int) -> LaurentSeries:
    """``prod_c (1 - e^-alpha) / prod_nc (1 - e^-alpha)``, for any block structure."""
    compact, noncompact = positive_roots(bs)
    s = LaurentSeries.one(bs.N, depth)
    for r in sorted(compact):
        s = s.times_binomial(root_coords(r, bs.N))
    for r in sorted(noncompact):
        s = s.over_binomial(root_coords(r, bs.N))
    return s


def b0_three_factor(bs: BlockStructure, depth: int) -> LaurentSeries:
    """The same series assembled as ``Delta_m * Delta_m_bar * (1 / Delta_u)`` for blocks (p, n, q)."""
    inside, across = phi_m_split(bs)
    _, noncompact = positive_roots(bs)
    N = bs.N
    return delta_product(inside, N, depth) * delta_product(across, N, depth) * geometric_inverse(noncompact, N, depth)


def compact_character(bs: BlockStructure, delta: Sequence[int], depth: int) -> LaurentSeries:
    """Character of the irreducible compact module of highest weight ``delta``.

    One Schur polynomial per compactness class, in that class's variables.
    """
    delta = tuple(int(x) for x in delta)
    if not is_dominant(delta, bs, "k'"):
        raise ValueError(f"delta = {delta} is not dominant for the compact subalgebra")
    factors = []
    for cls in bs.classes:
        weight = tuple(delta[i] for i in cls)
        factors.append((cls, schur_polynomial(weight, len(cls))))
    terms: dict[tuple[int, ...], int] = {}
    for combo in itertools.product(*(f.items() for _, f in factors)):
        exponent = [0] * bs.N
        coeff = 1
        for (cls, _), (mono, c) in zip(factors, combo):
            for i, e in zip(cls, mono):
                exponent[i] = e
            coeff *= c
        terms[tuple(exponent)] = terms.get(tuple(exponent), 0) + coeff
    return LaurentSeries.from_terms(terms, bs.N, depth, apex=delta)


def b_delta_series(bs: BlockStructure, delta: Sequence[int], depth: int) -> LaurentSeries:
    """``ch L(delta) * b(0)``; its coefficient at ``eta`` is ``B(delta, eta)``."""
    return compact_character(bs, delta, depth) * b0_series(bs, depth)


def _level_groups(bs: BlockStructure, level: str) -> tuple[tuple[int, ...], ...]:
    if level in ("m'", "m"):
        return bs.blocks
    if level in ("k'", "k"):
        return bs.classes
    if level in ("g'", "g"):
        return (tuple(range(bs.N)),)
    raise ValueError(f"unknown level {level!r}")


def dominant_terms(s: LaurentSeries, bs: BlockStructure, level: str = "m'") -> dict[tuple[int, ...], int]:
    """Window terms whose exponent is dominant at the given level (vectorized)."""
    if bs.N != s.N:
        raise ValueError("block structure and series disagree on N")
    data = s.data
    coords = np.argwhere(data != 0)
    if not len(coords):
        return {}
    apex = np.array(s.apex, dtype=np.int64)
    exps = _exponents_from_coords(apex, coords)
    keep = np.abs(exps - apex[None, :]).sum(axis=1) <= s.depth
    for group in _level_groups(bs, level):
        cols = exps[:, list(group)]
        keep &= np.all(cols[:, :-1] >= cols[:, 1:], axis=1)
    return {tuple(int(x) for x in row): int(data[tuple(idx)])
            for row, idx in zip(exps[keep], coords[keep])}


def dominant_filter(s: LaurentSeries, bs: BlockStructure, level: str = "m'") -> LaurentSeries:
    """Keep only the terms with dominant exponent at the given level."""
    terms = dominant_terms(s, bs, level)
    if s.data.dtype == object:
        return s.restrict(lambda e: is_dominant(e, bs, level))
    return LaurentSeries.from_terms(terms, s.N, s.depth, s.apex)


def coefficient(s: LaurentSeries, xi: Sequence[int]) -> int:
    return s.coefficient(xi)


# -- independent characters used by the product identities ----------------------

def matrix_space_character(bs: BlockStructure, depth: int) -> LaurentSeries:
    """Graded character of C[M_{p,q}] by the Cauchy sum ``sum_xi s_xi(x) s_xi(y)``.

    ``x_i = e^(-e_i)`` on the first block and ``y_j = e^(e_{p+n+j})`` on the
    last, so each matrix coordinate has weight ``-(e_i - e_{p+n+j})``.
    """
    p, n, q = bs.three_blocks
    N = bs.N
    terms: dict[tuple[int, ...], int] = {}
    # every box entry has degree <= side: each root crosses the middle block
    for xi in partitions_up_to(depth // 2, min(p, q)):
        sx = schur_polynomial(xi, p)
        sy = schur_polynomial(xi, q)
        for a, ca in sx.items():
            for b, cb in sy.items():
                e = tuple(-x for x in a) + (0,) * n + tuple(b)
                terms[e] = terms.get(e, 0) + ca * cb
    return LaurentSeries.from_terms(terms, N, depth)


def howe_space_character(bs: BlockStructure, depth: int) -> LaurentSeries:
    """Graded character of C[V], V = M_{p,n} + M_{n,q}, by listing monomials.

    The coordinate functions carry the weights ``-alpha`` for the noncompact
    positive roots ``alpha``.
    """
    _, noncompact = positive_roots(bs)
    N = bs.N
    side = depth // 2
    vectors = [root_coords(r, N) for r in sorted(noncompact)]
    terms: dict[tuple[int, ...], int] = {}

    def walk(k: int, acc: list[int]) -> None:
        if k == len(vectors):
            xi = [0] * N
            prev = 0
            for i, c in enumerate(acc):
                xi[i] = prev - c
                prev = c
            xi[N - 1] = prev
            e = tuple(xi)
            terms[e] = terms.get(e, 0) + 1
            return
        v = vectors[k]
        cur = list(acc)
        while all(x <= side for x in cur):
            walk(k + 1, cur)
            cur = [x + y for x, y in zip(cur, v)]

    walk(0, [0] * (N - 1))
    return LaurentSeries.from_terms(terms, N, depth)
