"""Charge and cocharge of words.

Two standard-subword decompositions are provided: the classical right-to-left
extraction (smallest letter first, wrapping to the rightmost occurrence) and
Killpatrick's left-to-right variant (largest letter first, wrapping to the
leftmost occurrence). Both give the same total charge.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .shape import conjugate

Word = tuple[int, ...]


def as_word(w) -> Word:
    """Accept a sequence of ints or a compact digit string like ``"121123"``."""
    if isinstance(w, str):
        w = w.strip()
        if "," in w or " " in w:
            return tuple(int(a) for a in w.replace(",", " ").split())
        return tuple(int(c) for c in w)
    return tuple(int(a) for a in w)


def word_str(w: Sequence[int]) -> str:
    """Compact digit string when every letter is a single digit."""
    if all(0 <= a <= 9 for a in w):
        return "".join(map(str, w))
    return " ".join(map(str, w))


def word_content(w: Iterable[int]) -> tuple[int, ...]:
    counts = Counter(as_word(w))
    if any(a < 1 for a in counts):
        raise ValueError("word letters must be positive integers")
    top = max(counts, default=0)
    return tuple(counts[i] for i in range(1, top + 1))


def has_partition_content(w: Iterable[int]) -> bool:
    mu = word_content(w)
    return all(a >= b for a, b in zip(mu, mu[1:])) and all(mu)


def is_standard(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def _require_standard(w: Word):
    if not is_standard(w):
        raise ValueError(f"not a standard word: {word_str(w)}")


def _require_partition_content(w: Word):
    if not has_partition_content(w):
        raise ValueError(f"word {word_str(w)} does not have partition content {word_content(w)}")


def charge_standard(w) -> int:
    """Sum of k - i over the letters i whose successor i + 1 sits to their right."""
    w = as_word(w)
    _require_standard(w)
    k = len(w)
    pos = {a: p for p, a in enumerate(w)}
    return sum(k - i for i in range(1, k) if pos[i + 1] > pos[i])


def cocharge_standard(w) -> int:
    """Sum of k - i over the letters i whose successor i + 1 sits to their left."""
    w = as_word(w)
    _require_standard(w)
    k = len(w)
    pos = {a: p for p, a in enumerate(w)}
    return sum(k - i for i in range(1, k) if pos[i + 1] < pos[i])


@dataclass(frozen=True)
class SubwordDecomposition:
    subwords: tuple[Word, ...]
    positions: tuple[tuple[int, ...], ...]  # 0-based, increasing within each subword


def _pick_cycle(w: Word, remaining: list[int], letters: Sequence[int], leftward: bool) -> list[int]:
    """Positions chosen for one standard subword.

    ``remaining`` is the sorted list of still-unused positions. The first
    letter is searched from the starting end; each later letter is searched
    strictly past the previous pick in the scan direction, wrapping to the
    starting end when none is found.
    """
    order = remaining[::-1] if leftward else remaining
    picked = []
    cursor = None  # index into order
    for letter in letters:
        start = 0 if cursor is None else cursor + 1
        hit = next((k for k in range(start, len(order)) if w[order[k]] == letter), None)
        if hit is None:
            hit = next(k for k in range(0, start) if w[order[k]] == letter)
        picked.append(order[hit])
        cursor = hit
    return picked


def _decompose(w, leftward: bool) -> SubwordDecomposition:
    w = as_word(w)
    _require_partition_content(w)
    remaining = list(range(len(w)))
    subwords, positions = [], []
    while remaining:
        m = max(w[p] for p in remaining)
        letters = range(1, m + 1) if leftward else range(m, 0, -1)
        picked = sorted(_pick_cycle(w, remaining, letters, leftward))
        chosen = set(picked)
        remaining = [p for p in remaining if p not in chosen]
        positions.append(tuple(picked))
        subwords.append(tuple(w[p] for p in picked))
    return SubwordDecomposition(tuple(subwords), tuple(positions))


def ls_decompose(w) -> SubwordDecomposition:
    """Classical (Lascoux-Schutzenberger) standard subwords."""
    return _decompose(w, leftward=True)


def killpatrick_decompose(w) -> SubwordDecomposition:
    return _decompose(w, leftward=False)


def charge(w, method: str = "classical") -> int:
    if method == "classical":
        dec = ls_decompose(w)
    elif method == "killpatrick":
        dec = killpatrick_decompose(w)
    else:
        raise ValueError(f"unknown charge method {method!r}")
    return sum(charge_standard(v) for v in dec.subwords)


def cocharge(w) -> int:
    """Sum of cocharges of the Killpatrick subwords."""
    return sum(cocharge_standard(v) for v in killpatrick_decompose(w).subwords)


def cocharge_classical(w) -> int:
    """Sum of cocharges of the classical subwords (an independent route)."""
    return sum(cocharge_standard(v) for v in ls_decompose(w).subwords)


def cocharge_complement(w) -> int:
    """Cocharge as sum_k C(mu'_k, 2) minus charge."""
    mu = word_content(w)
    return sum(comb(h, 2) for h in conjugate(mu)) - charge(w)
