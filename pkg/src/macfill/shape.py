"""Partitions, Young diagrams in English convention, and cell geometry."""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, NamedTuple


class Cell(NamedTuple):
    """A box of a Young diagram, 1-based (row, col), row 1 on top."""

    row: int
    col: int


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction. Anything that is not weakly
    decreasing is rejected rather than sorted.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        return conjugate(self)


def conjugate(shape: Iterable[int]) -> Partition:
    shape = Partition(shape)
    if not shape:
        return Partition()
    return Partition(sum(1 for p in shape if p >= k) for k in range(1, shape[0] + 1))


def n_stat(shape: Iterable[int]) -> int:
    """Sum of C(h, 2) over the column heights h of the diagram."""
    return sum(comb(h, 2) for h in conjugate(shape))


def cells(shape: Iterable[int]) -> list[Cell]:
    """All cells of the diagram in row-major order."""
    return [Cell(i, j) for i, length in enumerate(Partition(shape), 1) for j in range(1, length + 1)]


def is_cell(shape: Partition, u: Cell) -> bool:
    i, j = u
    return 1 <= i <= len(shape) and 1 <= j <= shape[i - 1]


def leg(shape: Iterable[int], u: Cell) -> int:
    """Number of cells strictly below ``u`` in its column."""
    shape = Partition(shape)
    i, j = u
    if not is_cell(shape, Cell(i, j)):
        raise ValueError(f"cell {tuple(u)} is not in the diagram of {tuple(shape)}")
    return sum(1 for p in shape[i:] if p >= j)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    """All partitions with 1 <= |shape| <= max_size, smallest sizes first."""
    for n in range(1, max_size + 1):
        yield from partitions(n)
