"""Greedy constructions of the inv/quinv extremal fillings and the bijections between them.

Each construction takes a family of rows (sets for the maximal cases,
multisets for the zero cases) and returns the unique filling in its class
with those row contents. The rules are kept as four separate functions on
purpose: the comparisons differ (weak vs strict, largest vs smallest) and
each is easier to audit on its own.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .filling import Filling, inv, quinv, row_multisets
from .shape import Partition, n_stat, conjugate


class NotExtremalError(ValueError):
    """Raised when a bijection receives a filling outside its domain."""


def _check_family(shape: Partition, family: Sequence[Sequence[int]], distinct: bool) -> list[list[int]]:
    family = [list(r) for r in family]
    if len(family) != len(shape):
        raise ValueError(f"expected {len(shape)} rows for shape {list(shape)}, got {len(family)}")
    for i, (r, length) in enumerate(zip(family, shape), 1):
        if len(r) != length:
            raise ValueError(f"row {i} has {len(r)} entries, shape needs {length}")
        if any(int(a) < 1 for a in r):
            raise ValueError(f"row {i} has a non-positive entry")
        if distinct and len(set(r)) != len(r):
            raise ValueError(f"row {i} repeats an element: {sorted(r)}")
    return family


def _take(pool: Counter, x: int) -> int:
    pool[x] -= 1
    if not pool[x]:
        del pool[x]
    return x


def build_inv_max(shape, sets: Sequence[Sequence[int]]) -> Filling:
    """The filling with inv = n(shape') whose row i holds exactly ``sets[i]``."""
    shape = Partition(shape)
    family = _check_family(shape, sets, distinct=True)
    rows: list[list[int]] = []
    for i, length in enumerate(shape):
        pool = Counter(family[i])
        if i == 0:
            rows.append(sorted(family[0], reverse=True))
            continue
        row = []
        for j in range(length):
            above = rows[i - 1][j]
            fits = [x for x in pool if x <= above]
            row.append(_take(pool, max(fits) if fits else max(pool)))
        rows.append(row)
    return Filling(shape, tuple(map(tuple, rows)))


def build_quinv_max(shape, sets: Sequence[Sequence[int]]) -> Filling:
    """The filling with quinv = n(shape') whose row i holds exactly ``sets[i]``."""
    shape = Partition(shape)
    family = _check_family(shape, sets, distinct=True)
    rows: list[list[int]] = [[] for _ in shape]
    for i in reversed(range(len(shape))):
        pool = Counter(family[i])
        if i == len(shape) - 1:
            rows[i] = sorted(family[i])
            continue
        below_row = rows[i + 1]
        for j in range(shape[i]):
            if j < len(below_row):
                fits = [x for x in pool if x >= below_row[j]]
                x = min(fits) if fits else min(pool)
            else:
                x = min(pool)
            rows[i].append(_take(pool, x))
    return Filling(shape, tuple(map(tuple, rows)))


def build_inv_zero(shape, multisets: Sequence[Sequence[int]]) -> Filling:
    """The filling with inv = 0 whose row i holds the multiset ``multisets[i]``."""
    shape = Partition(shape)
    family = _check_family(shape, multisets, distinct=False)
    rows: list[list[int]] = []
    for i, length in enumerate(shape):
        pool = Counter(family[i])
        if i == 0:
            rows.append(sorted(family[0]))
            continue
        row = []
        for j in range(length):
            above = rows[i - 1][j]
            fits = [x for x in pool if x > above]
            row.append(_take(pool, min(fits) if fits else min(pool)))
        rows.append(row)
    return Filling(shape, tuple(map(tuple, rows)))


def build_quinv_zero(shape, multisets: Sequence[Sequence[int]]) -> Filling:
    """The filling with quinv = 0 whose row i holds the multiset ``multisets[i]``."""
    shape = Partition(shape)
    family = _check_family(shape, multisets, distinct=False)
    rows: list[list[int]] = [[] for _ in shape]
    for i in reversed(range(len(shape))):
        pool = Counter(family[i])
        if i == len(shape) - 1:
            rows[i] = sorted(family[i], reverse=True)
            continue
        below_row = rows[i + 1]
        for j in range(shape[i]):
            if j < len(below_row):
                fits = [x for x in pool if x < below_row[j]]
                x = max(fits) if fits else max(pool)
            else:
                x = max(pool)
            rows[i].append(_take(pool, x))
    return Filling(shape, tuple(map(tuple, rows)))


BUILDERS = {
    "inv-max": build_inv_max,
    "quinv-max": build_quinv_max,
    "inv-zero": build_inv_zero,
    "quinv-zero": build_quinv_zero,
}


def phi(sigma: Filling) -> Filling:
    """Send an inv-maximal filling to the quinv-maximal filling with the same rows."""
    top = n_stat(conjugate(sigma.shape))
    value = inv(sigma)
    if value != top:
        raise NotExtremalError(f"filling is not inv-maximal: inv = {value}, maximum is {top}")
    return build_quinv_max(sigma.shape, row_multisets(sigma))


def varphi(sigma: Filling) -> Filling:
    """Send an inv-zero filling to the quinv-zero filling with the same row multisets."""
    value = inv(sigma)
    if value:
        raise NotExtremalError(f"filling is not inv-zero: inv = {value}")
    return build_quinv_zero(sigma.shape, row_multisets(sigma))


def classify(sigma: Filling) -> set[str]:
    top = n_stat(conjugate(sigma.shape))
    i, q = inv(sigma), quinv(sigma)
    found = set()
    if i == top:
        found.add("inv_max")
    if q == top:
        found.add("quinv_max")
    if i == 0:
        found.add("inv_zero")
    if q == 0:
        found.add("quinv_zero")
    return found
