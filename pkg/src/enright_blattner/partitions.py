"""Partitions, rational GL_n weights and the ``[plus, minus]`` codec.

A rational weight of GL_n is a weakly decreasing integer n-tuple.  It splits
into two partitions: the positive entries, and the negated negative entries
read from the right.  ``(5, 2, 0, 0, -1, -3, -4)`` splits as ``((5, 2), (4, 3, 1))``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers.

    Trailing zeros are stripped on construction, so ``Partition((5, 2, 0))``
    and ``Partition((5, 2))`` are the same value.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, k: int) -> tuple[int, ...]:
        if len(self) > k:
            raise ValueError(f"{self!r} has more than {k} parts")
        return tuple(self) + (0,) * (k - len(self))

    def contains(self, other: Sequence[int]) -> bool:
        """True if the diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class RationalWeight(tuple):
    """Highest weight of a rational GL_n representation: a weakly decreasing n-tuple."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("a rational weight needs at least one entry")
        for a, b in zip(entries, entries[1:]):
            if a < b:
                raise ValueError(f"weight entries must be weakly decreasing: {entries}")
        return super().__new__(cls, entries)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def plus(self) -> Partition:
        return Partition(x for x in self if x > 0)

    @property
    def minus(self) -> Partition:
        return Partition(-x for x in reversed(self) if x < 0)

    def __repr__(self) -> str:
        return f"RationalWeight({tuple(self)!r})"


def split(w: Sequence[int]) -> tuple[Partition, Partition]:
    w = RationalWeight(w)
    return w.plus, w.minus


def join(plus: Sequence[int], minus: Sequence[int], n: int) -> RationalWeight:
    """Inverse of :func:`split` at rank ``n``.

    Raises ``ValueError`` if the two partitions do not fit in ``n`` slots, in
    which case no GL_n weight has this pair of parts.
    """
    plus, minus = Partition(plus), Partition(minus)
    if n < 1:
        raise ValueError("rank must be positive")
    if len(plus) + len(minus) > n:
        raise ValueError(
            f"l({tuple(plus)}) + l({tuple(minus)}) > {n}: no such weight at rank {n}"
        )
    middle = n - len(plus) - len(minus)
    return RationalWeight(tuple(plus) + (0,) * middle + tuple(-x for x in reversed(minus)))


def _partitions_of(size: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    # reverse-lexicographic: larger first part first
    if size == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in _partitions_of(size - first, first, max_len - 1):
            yield (first,) + rest


def partitions_of(size: int, length_bound: int | None = None, part_bound: int | None = None) -> Iterator[Partition]:
    """Partitions of exactly ``size`` in reverse-lexicographic order."""
    max_len = size if length_bound is None else length_bound
    max_part = size if part_bound is None else part_bound
    for parts in _partitions_of(size, max_part, max_len):
        yield Partition(parts)


def partitions_up_to(size_bound: int, length_bound: int) -> Iterator[Partition]:
    """Every partition with size <= size_bound and length <= length_bound.

    Ordered by size, then reverse-lexicographically within a size, e.g.
    ``(), (1), (2), (1, 1)`` for bounds ``(2, 2)``.
    """
    if size_bound < 0 or length_bound < 0:
        raise ValueError("bounds must be nonnegative")
    for s in range(size_bound + 1):
        yield from partitions_of(s, length_bound)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    for s in range(rows * cols + 1):
        yield from partitions_of(s, rows, cols)


def rational_weights(n: int, size_bound: int) -> Iterator[RationalWeight]:
    """All rank-``n`` weights with ``|plus| + |minus| <= size_bound``."""
    for total in range(size_bound + 1):
        for a in range(total + 1):
            for plus in partitions_of(a, n):
                for minus in partitions_of(total - a, n - len(plus)):
                    yield join(plus, minus, n)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,2"``; the empty string and ``"0"`` are the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}: {exc}") from None


def parse_weight(text: str) -> tuple[int, ...]:
    """Parse a signed comma-separated integer tuple such as ``"5,2,0,-1"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty weight")
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"malformed weight {text!r}") from None


def format_parts(parts: Sequence[int]) -> str:
    return ",".join(str(x) for x in parts)


def subpartitions(outer: Sequence[int]) -> Iterator[Partition]:
    """Every partition whose diagram fits inside ``outer``."""
    outer = tuple(Partition(outer))

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == len(outer):
            yield ()
            return
        for v in range(min(cap, outer[i]), -1, -1):
            if v == 0:
                yield ()
                continue
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for parts in rec(0, outer[0] if outer else 0):
        yield Partition(parts)
