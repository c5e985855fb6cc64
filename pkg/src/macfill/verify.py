"""Exhaustive verification suites at desk scale.

Each suite returns a :class:`Report`: one PASS/FAIL line per check, then a
summary line. Reports contain no timings or thread counts, so they are
byte-identical across runs and across ``threads`` settings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from more_itertools import distinct_permutations

from . import words as ch
from .extremal import build_inv_max, build_inv_zero, build_quinv_max, build_quinv_zero
from .filling import Filling, inv, maj, quinv, row_equivalent, row_multisets
from .macdonald import (
    ConjectureCounterexample,
    conjecture_match,
    macdonald_poly,
    modified_hall_littlewood,
    q_whittaker,
    records,
    stat_profile,
)
from .poly import diff_text
from .reading import charge_word, cocharge_word
from .shape import Partition, conjugate, n_stat, partitions, partitions_up_to


@dataclass
class Report:
    suite: str
    header: str
    lines: list[str] = field(default_factory=list)
    failures: int = 0
    checks: int = 0

    def check(self, ok: bool, label: str, detail: str = ""):
        self.checks += 1
        self.lines.append(f"{'PASS' if ok else 'FAIL'} {label}")
        if not ok:
            self.failures += 1
            if detail:
                self.lines.extend("  " + d for d in detail.rstrip("\n").splitlines())

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def text(self) -> str:
        out = [f"suite {self.suite} {self.header}".rstrip()]
        out += self.lines
        out.append(f"{'PASS' if self.passed else 'FAIL'} {self.suite}: {self.checks - self.failures}/{self.checks} checks passed")
        return "\n".join(out) + "\n"


def _fmt_shape(shape) -> str:
    return "(" + ",".join(map(str, shape)) + ")"


def _shapes(shape=None, max_size: int | None = None) -> list[Partition]:
    if shape is not None:
        return [Partition(shape)]
    return list(partitions_up_to(max_size or 0))


def _header(shape, max_size, n) -> str:
    where = f"shape={_fmt_shape(shape)}" if shape is not None else f"max-size={max_size}"
    return f"{where} alphabet={n}"


def hhl_equality(shape=None, max_size=None, n: int = 3, threads: int = 1) -> Report:
    shapes = _shapes(shape, max_size)
    rep = Report("hhl-equality", _header(shape, max_size, n))
    for lam in shapes:
        a = macdonald_poly(lam, n, "inv", threads)
        b = macdonald_poly(lam, n, "quinv", threads)
        rep.check(a == b, f"shape={_fmt_shape(lam)} inv-sum == quinv-sum ({len(a)} terms)",
                  "inv-sum minus quinv-sum:\n" + diff_text(a, b))
    return rep


def symmetry(shape=None, max_size=None, n: int = 3, threads: int = 1) -> Report:
    shapes = _shapes(shape, max_size)
    rep = Report("symmetry", _header(shape, max_size, n))
    for lam in shapes:
        a = macdonald_poly(lam, n, "inv", threads).swap_qt()
        b = macdonald_poly(conjugate(lam), n, "inv", threads)
        rep.check(a == b, f"shape={_fmt_shape(lam)} swap_qt(H) == H of {_fmt_shape(conjugate(lam))}",
                  "difference:\n" + diff_text(a, b))
    return rep


def whittaker(shape=None, max_size=None, n: int = 3, threads: int = 1) -> Report:
    shapes = _shapes(shape, max_size)
    rep = Report("whittaker", _header(shape, max_size, n))
    for lam in shapes:
        ext = q_whittaker(lam, n, "extract", threads)
        for route in ("inv_max_sum", "quinv_max_sum"):
            other = q_whittaker(lam, n, route, threads)
            rep.check(ext == other, f"shape={_fmt_shape(lam)} extract == {route}",
                      "difference:\n" + diff_text(ext, other))
        if n >= len(conjugate(lam)):
            top = n_stat(conjugate(lam))
            deg = macdonald_poly(lam, n, "inv", threads).q_degree()
            rep.check(deg == top, f"shape={_fmt_shape(lam)} top q-degree {deg} == n(shape') {top}")
    return rep


def hall_littlewood(shape=None, max_size=None, n: int = 3, threads: int = 1) -> Report:
    shapes = _shapes(shape, max_size)
    rep = Report("hall-littlewood", _header(shape, max_size, n))
    for lam in shapes:
        ext = modified_hall_littlewood(lam, n, "extract", threads)
        for route in ("inv_zero_sum", "quinv_zero_sum"):
            other = modified_hall_littlewood(lam, n, route, threads)
            rep.check(ext == other, f"shape={_fmt_shape(lam)} extract == {route}",
                      "difference:\n" + diff_text(ext, other))
    return rep


def partition_content_words(max_length: int, max_letter: int) -> Iterator[tuple[int, ...]]:
    """Every word of partition content, shortest first, lexicographic within a content."""
    for length in range(1, max_length + 1):
        for mu in sorted(partitions(length), reverse=True):
            if len(mu) > max_letter:
                continue
            letters = [i for i, m in enumerate(mu, 1) for _ in range(m)]
            yield from distinct_permutations(letters)


def charge_equivalence(max_length: int = 8, max_letter: int = 4, threads: int = 1) -> Report:
    rep = Report("charge-equiv", f"max-length={max_length} max-letter={max_letter}")
    words = 0
    first_bad: dict[str, str] = {}
    for w in partition_content_words(max_length, max_letter):
        words += 1
        c1 = ch.charge(w, "classical")
        c2 = ch.charge(w, "killpatrick")
        k1 = ch.cocharge(w)
        k2 = ch.cocharge_complement(w)
        k3 = ch.cocharge_classical(w)
        if c1 != c2:
            first_bad.setdefault("classical == killpatrick", f"word {ch.word_str(w)}: classical {c1}, killpatrick {c2}")
        if not k1 == k2 == k3:
            first_bad.setdefault("cocharge routes agree",
                                 f"word {ch.word_str(w)}: killpatrick {k1}, complement {k2}, classical {k3}")
    for label in ("classical == killpatrick", "cocharge routes agree"):
        rep.check(label not in first_bad, f"{label} on {words} words",
                  "minimal counterexample: " + first_bad.get(label, ""))
    bad = None
    perms = 0
    for k in range(1, max_length + 1):
        for w in itertools.permutations(range(1, k + 1)):
            perms += 1
            if bad is None and ch.charge_standard(w) + ch.cocharge_standard(w) != comb(k, 2):
                bad = ch.word_str(w)
    rep.check(bad is None, f"charge + cocharge == C(k,2) on {perms} standard words",
              f"minimal counterexample: word {bad}")
    return rep


def _set_families(shape: Partition, n: int):
    return itertools.product(*(itertools.combinations(range(1, n + 1), p) for p in shape))


def _multiset_families(shape: Partition, n: int):
    return itertools.product(*(itertools.combinations_with_replacement(range(1, n + 1), p) for p in shape))


CLASSES = (
    # name, statistic field, target, builder, family kind, maj identity
    ("inv-max", "inv", "top", build_inv_max, "sets", ("charge", "standard")),
    ("quinv-max", "quinv", "top", build_quinv_max, "sets", ("charge", "primed")),
    ("inv-zero", "inv", 0, build_inv_zero, "multisets", ("cocharge", "standard")),
    ("quinv-zero", "quinv", 0, build_quinv_zero, "multisets", ("cocharge", "primed")),
)


def maj_identity(sigma: Filling, kind: str, order: str) -> int:
    if kind == "charge":
        return ch.charge(charge_word(sigma, order))
    return ch.cocharge(cocharge_word(sigma, order))


def uniqueness(shape=None, max_size=None, n: int = 3, threads: int = 1) -> Report:
    """One filling per row family in each extremal class, equal to the greedy output,
    with maj given by charge / cocharge of the matching reading word."""
    shapes = _shapes(shape, max_size)
    rep = Report("uniqueness", _header(shape, max_size, n))
    for lam in shapes:
        recs = records(lam, n, threads)
        top = n_stat(conjugate(lam))
        for name, stat, target, builder, kind, (ident, order) in CLASSES:
            goal = top if target == "top" else target
            found: dict[tuple, list[Filling]] = {}
            for r in recs:
                if getattr(r, stat) == goal:
                    found.setdefault(row_multisets(r.filling), []).append(r.filling)
            families = list(_set_families(lam, n) if kind == "sets" else _multiset_families(lam, n))
            problem = ""
            for fam in families:
                hits = found.pop(fam, [])
                if len(hits) != 1:
                    problem = f"rows {[list(r) for r in fam]}: {len(hits)} {name} fillings {[str(h) for h in hits]}"
                    break
                built = builder(lam, fam)
                if built != hits[0]:
                    problem = f"rows {[list(r) for r in fam]}: greedy gives {built}, enumeration gives {hits[0]}"
                    break
            if not problem and found:
                fam, hits = min(found.items())
                problem = f"{name} filling {hits[0]} has rows outside the expected families"
            rep.check(not problem, f"shape={_fmt_shape(lam)} {name} unique per family ({len(families)} families)",
                      "counterexample: " + problem)
            bad = None
            count = 0
            for r in recs:
                if getattr(r, stat) == goal:
                    count += 1
                    value = maj_identity(r.filling, ident, order)
                    if value != r.maj and bad is None:
                        bad = f"filling {r.filling}: maj {r.maj}, {ident} {value}"
            rep.check(bad is None, f"shape={_fmt_shape(lam)} {name} maj == {ident}({order} word) on {count} fillings",
                      "counterexample: " + (bad or ""))
    return rep


def conjecture(shape=None, max_size=None, n: int = 3, threads: int = 1) -> Report:
    shapes = _shapes(shape, max_size)
    rep = Report("conjecture", _header(shape, max_size, n))
    for lam in shapes:
        pi = stat_profile(lam, n, "inv", threads)
        pq = stat_profile(lam, n, "quinv", threads)
        diffs = pi.difference(pq)
        detail = ""
        if diffs:
            key, a, b = diffs[0]
            detail = f"class rows={[list(r) for r in key[0]]} maj={key[1]} stat={key[2]}: inv {a}, quinv {b}"
        rep.check(not diffs, f"shape={_fmt_shape(lam)} inv profile == quinv profile ({len(pi.by_rows)} classes)", detail)
        try:
            pairs = conjecture_match(lam, n, threads)
        except ConjectureCounterexample as exc:
            rep.check(False, f"shape={_fmt_shape(lam)} complete matching", f"counterexample: {exc}")
            continue
        rep.check(_matching_ok(pairs, lam, n), f"shape={_fmt_shape(lam)} complete matching with {len(pairs)} pairs")
    return rep


def _matching_ok(pairs, shape, n) -> bool:
    total = n ** Partition(shape).size
    sigmas = {p.sigma for p in pairs}
    deltas = {p.delta for p in pairs}
    if len(pairs) != total or len(sigmas) != total or len(deltas) != total:
        return False
    return all(
        row_equivalent(p.sigma, p.delta) and maj(p.sigma) == maj(p.delta) == p.maj
        and quinv(p.sigma) == inv(p.delta) == p.stat
        for p in pairs
    )


SUITES: dict[str, Callable[..., Report]] = {
    "hhl-equality": hhl_equality,
    "symmetry": symmetry,
    "whittaker": whittaker,
    "hall-littlewood": hall_littlewood,
    "charge-equiv": charge_equivalence,
    "uniqueness": uniqueness,
    "conjecture": conjecture,
}
