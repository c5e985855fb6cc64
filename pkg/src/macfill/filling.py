"""Fillings of Young diagrams and the maj / inv / quinv statistics."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from math import inf
from typing import Sequence

from .shape import Cell, Partition, leg


@dataclass(frozen=True, order=True)
class Filling:
    """Positive integers on the cells of a diagram, rows listed top to bottom."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = Partition(self.shape)
        rows = tuple(tuple(int(a) for a in r) for r in self.rows)
        if tuple(len(r) for r in rows) != tuple(shape):
            raise ValueError(f"row lengths {[len(r) for r in rows]} do not match shape {list(shape)}")
        if any(a < 1 for r in rows for a in r):
            raise ValueError("filling entries must be positive integers")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Filling:
        return cls(Partition(len(r) for r in rows), tuple(tuple(r) for r in rows))

    def __getitem__(self, u: Cell) -> int:
        i, j = u
        return self.rows[i - 1][j - 1]

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> Filling:
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or "rows" not in obj:
            raise ValueError('filling JSON must be an object with a "rows" key')
        rows = obj["rows"]
        shape = obj.get("shape", [len(r) for r in rows])
        return cls(Partition(shape), tuple(tuple(r) for r in rows))

    def __str__(self):
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def content(sigma: Filling) -> tuple[int, ...]:
    """Multiplicities of the letters 1, 2, ..., trailing zeros stripped."""
    counts = Counter(a for r in sigma.rows for a in r)
    top = max(counts, default=0)
    return tuple(counts[i] for i in range(1, top + 1))


def descents(sigma: Filling) -> set[Cell]:
    rows = sigma.rows
    return {
        Cell(i + 1, j + 1)
        for i in range(1, len(rows))
        for j in range(len(rows[i]))
        if rows[i][j] > rows[i - 1][j]
    }


def maj(sigma: Filling) -> int:
    return sum(leg(sigma.shape, u) + 1 for u in descents(sigma))


def is_inversion_pattern(x, y, z) -> bool:
    """Membership of a value triple in the cyclic pattern set shared by inv and quinv."""
    return y < z < x or x < y < z or z < x < y or (x == y and y != z)


def inv(sigma: Filling) -> int:
    """Inversion triples, with a 0 implicitly placed above every column."""
    rows = sigma.rows
    total = 0
    for i, row in enumerate(rows):
        above = rows[i - 1] if i else None
        for j, x in enumerate(row):
            y = above[j] if above is not None else 0
            for z in row[j + 1:]:
                if is_inversion_pattern(x, y, z):
                    total += 1
    return total


def quinv(sigma: Filling) -> int:
    """q-inversion triples, with an infinite entry implicitly placed below every column."""
    rows = sigma.rows
    total = 0
    for i, row in enumerate(rows):
        below = rows[i + 1] if i + 1 < len(rows) else ()
        for j, y in enumerate(row):
            x = below[j] if j < len(below) else inf
            for z in row[j + 1:]:
                if is_inversion_pattern(x, y, z):
                    total += 1
    return total


def row_multisets(sigma: Filling) -> tuple[tuple[int, ...], ...]:
    """Each row's entries as a sorted tuple (canonical multiset form)."""
    return tuple(tuple(sorted(r)) for r in sigma.rows)


def row_equivalent(sigma: Filling, tau: Filling) -> bool:
    return sigma.shape == tau.shape and row_multisets(sigma) == row_multisets(tau)
