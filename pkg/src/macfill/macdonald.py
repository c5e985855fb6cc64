"""Generating functions over bounded-alphabet fillings.

Restricting entries to {1..n} specialises x_{n+1} = x_{n+2} = ... = 0, so the
inv and quinv formulas for the modified Macdonald polynomial must agree as
polynomials in x1..xn, q, t. Everything here is built from that enumeration.

Enumeration is an odometer over the cells in row-major order (last cell
varies fastest). Fixing a prefix of cell values selects a contiguous slice,
which is how work is split across threads; partial results are merged in
prefix order so the output never depends on scheduling.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple, Sequence, TypeVar

from .filling import Filling, content, inv, maj, quinv, row_multisets
from .poly import Monomial, MultiPoly
from .shape import Partition, conjugate, n_stat

T = TypeVar("T")

STATS: dict[str, Callable[[Filling], int]] = {"inv": inv, "quinv": quinv}


def _stat(name: str) -> Callable[[Filling], int]:
    try:
        return STATS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}, expected inv or quinv") from None


def enumerate_fillings(shape, n: int, prefix: Sequence[int] = ()) -> Iterator[Filling]:
    """Every filling with entries in {1..n}, optionally with the first cells fixed."""
    shape = Partition(shape)
    if n < 1:
        raise ValueError("alphabet size must be at least 1")
    size = shape.size
    prefix = tuple(prefix)
    if len(prefix) > size or any(not 1 <= a <= n for a in prefix):
        raise ValueError(f"invalid enumeration prefix {prefix}")
    bounds = list(itertools.accumulate(shape, initial=0))
    for tail in itertools.product(range(1, n + 1), repeat=size - len(prefix)):
        flat = prefix + tail
        yield Filling(shape, tuple(flat[bounds[i]:bounds[i + 1]] for i in range(len(shape))))


def prefixes(shape, n: int, depth: int = 1) -> list[tuple[int, ...]]:
    """Enumeration slices, in order, covering every filling exactly once."""
    depth = min(depth, Partition(shape).size)
    return list(itertools.product(range(1, n + 1), repeat=depth))


def _run_sliced(shape, n: int, work: Callable[[tuple[int, ...]], T], threads: int) -> list[T]:
    slices = prefixes(shape, n, depth=1 if threads <= 1 else 2)
    if threads <= 1:
        return [work(p) for p in slices]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, slices))


def x_exponents(sigma: Filling, n: int) -> tuple[int, ...]:
    mu = content(sigma)
    if len(mu) > n:
        raise ValueError(f"filling uses letter {len(mu)} outside alphabet of size {n}")
    return mu + (0,) * (n - len(mu))


def _weighted_sum(shape, n: int, weight: Callable[[Filling], tuple[int, int] | None], threads: int) -> MultiPoly:
    """Sum of q^a t^b x^sigma over fillings, where ``weight`` gives (a, b) or None to skip."""

    def work(prefix):
        acc: Counter = Counter()
        for sigma in enumerate_fillings(shape, n, prefix):
            w = weight(sigma)
            if w is not None:
                acc[Monomial(x_exponents(sigma, n), w[0], w[1])] += 1
        return MultiPoly(n, acc)

    total = MultiPoly.zero(n)
    for part in _run_sliced(shape, n, work, threads):
        total = total.merge(part)
    return total


def macdonald_poly(shape, n: int, stat: str = "inv", threads: int = 1) -> MultiPoly:
    """Sum over fillings of q^stat t^maj x^sigma."""
    f = _stat(stat)
    return _weighted_sum(shape, n, lambda s: (f(s), maj(s)), threads)


def q_whittaker(shape, n: int, route: str = "extract", threads: int = 1) -> MultiPoly:
    """Coefficient of the top power q^n(shape') of the modified Macdonald polynomial."""
    top = n_stat(conjugate(shape))
    if route == "extract":
        return macdonald_poly(shape, n, "inv", threads).coeff_of_q(top)
    if route in ("inv_max_sum", "quinv_max_sum"):
        f = inv if route == "inv_max_sum" else quinv
        return _weighted_sum(shape, n, lambda s: (0, maj(s)) if f(s) == top else None, threads)
    raise ValueError(f"unknown q-Whittaker route {route!r}")


def modified_hall_littlewood(shape, n: int, route: str = "extract", threads: int = 1) -> MultiPoly:
    """Constant term in q of the modified Macdonald polynomial."""
    if route == "extract":
        return macdonald_poly(shape, n, "inv", threads).coeff_of_q(0)
    if route in ("inv_zero_sum", "quinv_zero_sum"):
        f = inv if route == "inv_zero_sum" else quinv
        return _weighted_sum(shape, n, lambda s: (0, maj(s)) if f(s) == 0 else None, threads)
    raise ValueError(f"unknown Hall-Littlewood route {route!r}")


class Record(NamedTuple):
    filling: Filling
    maj: int
    inv: int
    quinv: int


def records(shape, n: int, threads: int = 1) -> list[Record]:
    """(filling, maj, inv, quinv) for every filling, in enumeration order."""

    def work(prefix):
        return [Record(s, maj(s), inv(s), quinv(s)) for s in enumerate_fillings(shape, n, prefix)]

    return [r for part in _run_sliced(shape, n, work, threads) for r in part]


@dataclass(frozen=True)
class StatProfile:
    """Joint distribution of (content, maj, stat), and its refinement by row multisets."""

    by_content: Counter = field(default_factory=Counter)
    by_rows: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.by_content.values())

    def merge(self, other: StatProfile) -> StatProfile:
        return StatProfile(self.by_content + other.by_content, self.by_rows + other.by_rows)

    def difference(self, other: StatProfile) -> list[tuple]:
        """Keys whose multiplicities differ, as (key, self count, other count)."""
        out = []
        for key in sorted(set(self.by_rows) | set(other.by_rows)):
            a, b = self.by_rows[key], other.by_rows[key]
            if a != b:
                out.append((key, a, b))
        return out


def stat_profile(shape, n: int, stat: str = "inv", threads: int = 1) -> StatProfile:
    f = _stat(stat)

    def work(prefix):
        by_content, by_rows = Counter(), Counter()
        for s in enumerate_fillings(shape, n, prefix):
            m, v = maj(s), f(s)
            by_content[(content(s), m, v)] += 1
            by_rows[(row_multisets(s), m, v)] += 1
        return StatProfile(by_content, by_rows)

    total = StatProfile()
    for part in _run_sliced(shape, n, work, threads):
        total = total.merge(part)
    return total


class ConjectureCounterexample(Exception):
    """A class of quinv-fillings and the matching class of inv-fillings have different sizes."""

    def __init__(self, key, quinv_class, inv_class):
        self.key = key
        self.quinv_class = quinv_class
        self.inv_class = inv_class
        rows, m, p = key
        super().__init__(
            f"class rows={[list(r) for r in rows]} maj={m} stat={p}: "
            f"{len(quinv_class)} fillings with quinv={p} but {len(inv_class)} with inv={p}"
        )


class MatchPair(NamedTuple):
    sigma: Filling
    delta: Filling
    maj: int
    stat: int

    def to_json(self) -> dict:
        return {"sigma": self.sigma.to_json(), "delta": self.delta.to_json(), "maj": self.maj, "stat": self.stat}


def conjecture_match(shape, n: int, threads: int = 1) -> list[MatchPair]:
    """Pair every filling sigma with a delta(sigma) that is row-equivalent, has equal maj,
    and has inv(delta) = quinv(sigma).

    Within each class keyed by (row multisets, maj, value) the k-th smallest
    sigma goes to the k-th smallest delta. This is a canonical choice, not a
    claim about any natural bijection.
    """
    by_quinv: dict[tuple, list[Filling]] = defaultdict(list)
    by_inv: dict[tuple, list[Filling]] = defaultdict(list)
    for r in records(shape, n, threads):
        rows = row_multisets(r.filling)
        by_quinv[(rows, r.maj, r.quinv)].append(r.filling)
        by_inv[(rows, r.maj, r.inv)].append(r.filling)
    pairs = []
    for key in sorted(set(by_quinv) | set(by_inv)):
        sig, dlt = sorted(by_quinv.get(key, [])), sorted(by_inv.get(key, []))
        if len(sig) != len(dlt):
            raise ConjectureCounterexample(key, sig, dlt)
        pairs.extend(MatchPair(s, d, key[1], key[2]) for s, d in zip(sig, dlt))
    pairs.sort(key=lambda p: p.sigma)
    return pairs
