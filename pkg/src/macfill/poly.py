"""Sparse integer polynomials in x1..xn, q, t.

Only what sums over fillings need: accumulation, q-coefficient extraction,
the q <-> t swap, equality, and a line-oriented text format. Coefficients
are Python ints, so overflow cannot happen.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple


class Monomial(NamedTuple):
    xexp: tuple[int, ...]
    qexp: int = 0
    texp: int = 0


def _sort_key(m: Monomial):
    return (m.qexp, m.texp, sum(m.xexp), m.xexp)


class MultiPoly:
    """Immutable map Monomial -> nonzero int over a fixed alphabet size."""

    __slots__ = ("alphabet_size", "_terms", "_hash")

    def __init__(self, alphabet_size: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        self.alphabet_size = int(alphabet_size)
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            m = Monomial(tuple(m[0]), m[1], m[2])
            self._check(m)
            acc[m] = acc.get(m, 0) + int(c)
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    def _check(self, m: Monomial):
        if len(m.xexp) != self.alphabet_size:
            raise ValueError(f"monomial has {len(m.xexp)} x-exponents, alphabet size is {self.alphabet_size}")

    def _check_other(self, other: MultiPoly):
        if self.alphabet_size != other.alphabet_size:
            raise ValueError(f"alphabet size mismatch: {self.alphabet_size} vs {other.alphabet_size}")

    @classmethod
    def zero(cls, alphabet_size: int) -> MultiPoly:
        return cls(alphabet_size)

    @classmethod
    def one(cls, alphabet_size: int) -> MultiPoly:
        return cls(alphabet_size, {Monomial((0,) * alphabet_size): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0])))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(Monomial(tuple(m[0]), m[1], m[2]), 0)

    def add_term(self, m: Monomial, c: int) -> MultiPoly:
        m = Monomial(tuple(m[0]), m[1], m[2])
        self._check(m)
        return MultiPoly(self.alphabet_size, list(self._terms.items()) + [(m, c)])

    def merge(self, other: MultiPoly) -> MultiPoly:
        self._check_other(other)
        return MultiPoly(self.alphabet_size, list(self._terms.items()) + list(other._terms.items()))

    __add__ = merge

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.alphabet_size, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self.merge(-other)

    def coeff_of_q(self, k: int) -> MultiPoly:
        """Terms with q-degree k, with q removed."""
        return MultiPoly(
            self.alphabet_size,
            {Monomial(m.xexp, 0, m.texp): c for m, c in self._terms.items() if m.qexp == k},
        )

    def swap_qt(self) -> MultiPoly:
        return MultiPoly(self.alphabet_size, {Monomial(m.xexp, m.texp, m.qexp): c for m, c in self._terms.items()})

    def q_degree(self) -> int:
        return max((m.qexp for m in self._terms), default=-1)

    def equals(self, other: MultiPoly) -> bool:
        self._check_other(other)
        return self._terms == other._terms

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.alphabet_size == other.alphabet_size and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alphabet_size, frozenset(self._terms.items())))
        return self._hash

    def to_text(self) -> str:
        """One term per line, ``<coeff> q^a t^b x1^e1 ...``; zero exponents omitted."""
        if not self._terms:
            return "0\n"
        lines = []
        for m, c in self:
            parts = [str(c)]
            if m.qexp:
                parts.append(f"q^{m.qexp}")
            if m.texp:
                parts.append(f"t^{m.texp}")
            parts += [f"x{i}^{e}" for i, e in enumerate(m.xexp, 1) if e]
            lines.append(" ".join(parts))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, alphabet_size: int) -> MultiPoly:
        terms = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line == "0":
                continue
            coeff, *factors = line.split()
            x = [0] * alphabet_size
            q = t = 0
            for f in factors:
                match = _FACTOR.fullmatch(f)
                if not match:
                    raise ValueError(f"line {lineno}: cannot parse factor {f!r}")
                var, idx, exp = match.group(1), match.group(2), int(match.group(3))
                if var == "q":
                    q = exp
                elif var == "t":
                    t = exp
                else:
                    i = int(idx)
                    if not 1 <= i <= alphabet_size:
                        raise ValueError(f"line {lineno}: variable x{i} outside alphabet of size {alphabet_size}")
                    x[i - 1] = exp
            terms.append((Monomial(tuple(x), q, t), int(coeff)))
        return cls(alphabet_size, terms)

    def __repr__(self):
        return f"MultiPoly({self.alphabet_size}, {len(self._terms)} terms)"

    def __str__(self):
        return self.to_text().rstrip("\n").replace("\n", " + ")


_FACTOR = re.compile(r"(?:(q|t)|x(\d+))\^(\d+)")


def diff_text(a: MultiPoly, b: MultiPoly) -> str:
    """Human-readable a - b, empty when equal."""
    d = a - b
    return "" if not d else d.to_text()
