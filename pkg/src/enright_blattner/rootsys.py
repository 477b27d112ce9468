"""Type A root data for sl_N with a chosen set of noncompact simple roots.

The block structure ``(b1, ..., bk)`` puts the noncompact simple roots at the
partial sums ``b1, b1 + b2, ...``.  A root ``e_i - e_j`` is compact exactly
when an even number of those positions lie in ``[i, j)``, so coordinates fall
into (at most) two compactness classes: blocks of even index and blocks of odd
index.

Weights are raw integer tuples in standard coordinates.  Nothing is reduced
modulo the uniform shift; ``rho`` returns exact :class:`~fractions.Fraction`
tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .exceptions import CapExceededError

#: Largest compact Weyl group :func:`compact_weyl_group` will enumerate (10!).
DEFAULT_WEYL_CAP = math.factorial(10)

LEVELS = ("m'", "k'", "g'")


class Root(NamedTuple):
    """The root ``e_i - e_j`` with 1-based coordinate indices."""

    i: int
    j: int

    @property
    def positive(self) -> bool:
        return self.i < self.j

    def vector(self, N: int) -> tuple[int, ...]:
        v = [0] * N
        v[self.i - 1] += 1
        v[self.j - 1] -= 1
        return tuple(v)

    def __str__(self) -> str:
        return f"e{self.i}-e{self.j}"


@dataclass(frozen=True)
class BlockStructure:
    block_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(b) for b in self.block_sizes)
        if not sizes:
            raise ValueError("need at least one block")
        if any(b < 1 for b in sizes):
            raise ValueError(f"block sizes must be positive: {sizes}")
        if sum(sizes) < 2:
            raise ValueError("sl_N needs N >= 2")
        object.__setattr__(self, "block_sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> "BlockStructure":
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed block structure {text!r}: {exc}") from None

    @property
    def N(self) -> int:
        return sum(self.block_sizes)

    @cached_property
    def noncompact_simple(self) -> tuple[int, ...]:
        """1-based indices k of the noncompact simple roots ``e_k - e_{k+1}``."""
        return tuple(itertools.accumulate(self.block_sizes))[:-1]

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        """Block index of each (0-based) coordinate."""
        return tuple(b for b, size in enumerate(self.block_sizes) for _ in range(size))

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """0-based coordinates of each compactness class, in coordinate order."""
        even = tuple(i for i in range(self.N) if self.block_of[i] % 2 == 0)
        odd = tuple(i for i in range(self.N) if self.block_of[i] % 2 == 1)
        return (even, odd) if odd else (even,)

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """0-based coordinates of each block."""
        out, start = [], 0
        for size in self.block_sizes:
            out.append(tuple(range(start, start + size)))
            start += size
        return tuple(out)

    def is_compact(self, root: Root) -> bool:
        return self.block_of[root.i - 1] % 2 == self.block_of[root.j - 1] % 2

    @property
    def three_blocks(self) -> tuple[int, int, int]:
        if len(self.block_sizes) != 3:
            raise ValueError(f"expected blocks (p, n, q), got {self.block_sizes}")
        return self.block_sizes  # type: ignore[return-value]

    def __str__(self) -> str:
        return ",".join(map(str, self.block_sizes))


def positive_roots(bs: BlockStructure) -> tuple[frozenset[Root], frozenset[Root]]:
    """Split the positive roots into ``(compact, noncompact)``."""
    compact, noncompact = set(), set()
    for i in range(1, bs.N + 1):
        for j in range(i + 1, bs.N + 1):
            r = Root(i, j)
            (compact if bs.is_compact(r) else noncompact).add(r)
    return frozenset(compact), frozenset(noncompact)


def phi_m_split(bs: BlockStructure) -> tuple[frozenset[Root], frozenset[Root]]:
    """Compact positive roots inside a single block, and those joining blocks 1 and 3."""
    bs.three_blocks
    compact, _ = positive_roots(bs)
    inside = frozenset(r for r in compact if bs.block_of[r.i - 1] == bs.block_of[r.j - 1])
    return inside, compact - inside


def sorted_roots(roots) -> list[Root]:
    return sorted(roots, key=lambda r: (r.j - r.i, r.i))


def rho(bs: BlockStructure, which: str = "compact") -> tuple[Fraction, ...]:
    """Half the sum of the compact (or noncompact) positive roots."""
    compact, noncompact = positive_roots(bs)
    roots = {"compact": compact, "noncompact": noncompact}[which]
    total = [0] * bs.N
    for r in roots:
        total[r.i - 1] += 1
        total[r.j - 1] -= 1
    return tuple(Fraction(x, 2) for x in total)


def simple_coords(v: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of a root-lattice vector in the simple-root basis.

    Only meaningful when ``sum(v) == 0``; the caller checks that.
    """
    return tuple(itertools.accumulate(v))[:-1]


def height(v: Sequence[int]) -> int:
    return sum(simple_coords(v))


@dataclass(frozen=True)
class CompactWeylElement:
    """A permutation ``perm`` with ``perm[i] = w(i)`` (0-based) and its length."""

    perm: tuple[int, ...]
    length: int

    def act(self, v: Sequence) -> tuple:
        out = [None] * len(v)
        for i, x in enumerate(v):
            out[self.perm[i]] = x
        return tuple(out)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1


def weyl_group_order(bs: BlockStructure) -> int:
    return math.prod(math.factorial(len(c)) for c in bs.classes)


def compact_weyl_group(bs: BlockStructure, cap: int = DEFAULT_WEYL_CAP) -> Iterator[CompactWeylElement]:
    """Every permutation preserving the compactness classes, with its length.

    The length counts compact positive roots sent to negative roots, i.e.
    inversions among pairs in the same class.
    """
    order = weyl_group_order(bs)
    if order > cap:
        raise CapExceededError(f"compact Weyl group has {order} elements, cap is {cap}")
    classes = bs.classes
    for choice in itertools.product(*(itertools.permutations(c) for c in classes)):
        perm = [0] * bs.N
        for cls, images in zip(classes, choice):
            for src, dst in zip(cls, images):
                perm[src] = dst
        length = 0
        for cls in classes:
            for a, b in itertools.combinations(cls, 2):
                if perm[a] > perm[b]:
                    length += 1
        yield CompactWeylElement(tuple(perm), length)


def _decreasing(values: Sequence, strict: bool) -> bool:
    if strict:
        return all(a > b for a, b in zip(values, values[1:]))
    return all(a >= b for a, b in zip(values, values[1:]))


def is_dominant(w: Sequence, bs: BlockStructure, level: str = "m'", strict: bool = False) -> bool:
    """Dominance at the Levi (m'), compact (k') or full (g') level.

    ``strict=True`` asks for strict inequalities, which at level g' is
    regularity: ``(w, alpha) != 0`` for every root.
    """
    if len(w) != bs.N:
        raise ValueError(f"weight has {len(w)} coordinates, expected {bs.N}")
    if level in ("m'", "m"):
        groups = bs.blocks
    elif level in ("k'", "k"):
        groups = bs.classes
    elif level in ("g'", "g"):
        groups = (tuple(range(bs.N)),)
    else:
        raise ValueError(f"unknown level {level!r}; expected one of {LEVELS}")
    return all(_decreasing([w[i] for i in g], strict) for g in groups)


def triple_encode(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], bs: BlockStructure) -> tuple[int, ...]:
    """The weight ``(-mu_p, ..., -mu_1, lam_1, ..., lam_n, nu_1, ..., nu_q)``."""
    p, n, q = bs.three_blocks
    if len(lam) != n:
        raise ValueError(f"lambda must have exactly {n} entries, got {tuple(lam)}")
    mu, nu = tuple(mu), tuple(nu)
    if len(mu) > p or len(nu) > q:
        raise ValueError(f"mu needs length <= {p} and nu length <= {q}")
    mu = mu + (0,) * (p - len(mu))
    nu = nu + (0,) * (q - len(nu))
    return tuple(-x for x in reversed(mu)) + tuple(lam) + tuple(nu)


def triple_decode(w: Sequence[int], bs: BlockStructure) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Inverse of :func:`triple_encode`; returns raw ``(lam, mu, nu)`` tuples."""
    p, n, q = bs.three_blocks
    if len(w) != p + n + q:
        raise ValueError(f"weight has {len(w)} coordinates, expected {p + n + q}")
    w = tuple(w)
    mu = tuple(-x for x in reversed(w[:p]))
    return w[p:p + n], mu, w[p + n:]
