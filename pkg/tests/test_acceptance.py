"""Exit criteria. All comparisons are exact (tolerance zero); wall-clock budgets as stated."""

import time

import pytest

from macfill.cli import main
from macfill.extremal import build_inv_max, build_inv_zero, build_quinv_max, build_quinv_zero, phi, varphi
from macfill.filling import Filling, inv, maj, quinv
from macfill.macdonald import macdonald_poly, modified_hall_littlewood, q_whittaker
from macfill.reading import charge_word, cocharge_word
from macfill.shape import conjugate, partitions_up_to
from macfill.verify import SUITES, charge_equivalence, conjecture, uniqueness
from macfill.words import charge, charge_standard, killpatrick_decompose, ls_decompose, word_str

from conftest import ACCEPTANCE_LINES
from worked import (
    INV3_ROWS,
    INV_MAX_ROWS,
    INV_ZERO_ROWS,
    MAJ6_ROWS,
    QUINV_MAX_ROWS,
    QUINV_ZERO_ROWS,
    ROW_MULTISETS,
    ROW_SETS,
    SAMPLE_WORD,
    SHAPE_7542,
)


class Criterion:
    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.failures = []

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if self.budget is not None and elapsed >= self.budget:
            self.failures.append(f"took {elapsed:.2f}s, budget {self.budget}s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"criterion {self.number} {status} {self.title} ({elapsed:.2f}s)"
        if self.failures:
            line += ": " + "; ".join(self.failures[:3])
        ACCEPTANCE_LINES.append(line)
        print(line)
        if exc_type is None:
            assert not self.failures, line
        return False


def test_criterion_1_worked_examples():
    with Criterion(1, "worked-example fidelity", 1.0) as c:
        c.check(maj(Filling.from_rows(MAJ6_ROWS)) == 6, "maj 6")
        c.check(inv(Filling.from_rows(INV3_ROWS)) == 3, "inv 3")
        c.check(quinv(Filling.from_rows(INV3_ROWS)) == 6, "quinv 6")

        c.check(charge_standard("1465327") == 10, "charge 10")
        ls = ls_decompose(SAMPLE_WORD)
        c.check([word_str(v) for v in ls.subwords] == ["321", "213", "213", "12", "1"], "classical subwords")
        c.check(charge(SAMPLE_WORD) == 3, "charge 3")
        kp = killpatrick_decompose(SAMPLE_WORD)
        c.check([word_str(v) for v in kp.subwords] == ["321", "132", "213", "21", "1"], "killpatrick subwords")
        c.check([charge_standard(v) for v in kp.subwords] == [0, 2, 1, 0, 0], "killpatrick charges")

        sigma = Filling.from_rows(MAJ6_ROWS)
        for order in ("standard", "primed"):
            c.check(word_str(cocharge_word(sigma, order)) == "121112132213", f"cw {order}")
            c.check(word_str(charge_word(sigma, order)) == "312231211121", f"w {order}")

        a, b = build_inv_max(SHAPE_7542, ROW_SETS), build_quinv_max(SHAPE_7542, ROW_SETS)
        c.check(a.rows == INV_MAX_ROWS and b.rows == QUINV_MAX_ROWS, "maximal fillings")
        c.check(maj(a) == maj(b) == 7, "maximal maj 7")
        c.check(phi(a) == b, "phi")

        a, b = build_inv_zero(SHAPE_7542, ROW_MULTISETS), build_quinv_zero(SHAPE_7542, ROW_MULTISETS)
        c.check(a.rows == INV_ZERO_ROWS and b.rows == QUINV_ZERO_ROWS, "zero fillings")
        c.check(maj(a) == maj(b) == 15, "zero maj 15")
        c.check(varphi(a) == b, "varphi")


def test_criterion_2_inv_and_quinv_sums_agree():
    with Criterion(2, "inv-sum == quinv-sum, |shape|<=6 n=3 and |shape|<=5 n=4", 10.0) as c:
        for n, bound in ((3, 6), (4, 5)):
            for lam in partitions_up_to(bound):
                c.check(macdonald_poly(lam, n, "inv") == macdonald_poly(lam, n, "quinv"), f"{tuple(lam)} n={n}")


def test_criterion_3_qt_symmetry():
    with Criterion(3, "swap_qt(H_shape) == H_conjugate, |shape|<=5 n=3", 5.0) as c:
        for lam in partitions_up_to(5):
            c.check(macdonald_poly(lam, 3).swap_qt() == macdonald_poly(conjugate(lam), 3), str(tuple(lam)))


def test_criterion_4_specialisation_routes():
    with Criterion(4, "q-Whittaker and Hall-Littlewood routes agree, |shape|<=5 n=3", 5.0) as c:
        for lam in partitions_up_to(5):
            qw = [q_whittaker(lam, 3, r) for r in ("extract", "inv_max_sum", "quinv_max_sum")]
            hl = [modified_hall_littlewood(lam, 3, r) for r in ("extract", "inv_zero_sum", "quinv_zero_sum")]
            c.check(qw[0] == qw[1] == qw[2], f"whittaker {tuple(lam)}")
            c.check(hl[0] == hl[1] == hl[2], f"hall-littlewood {tuple(lam)}")


def test_criterion_5_charge_equivalence():
    with Criterion(5, "classical == killpatrick charge and cocharge complement, length<=8 letters<=4", 30.0) as c:
        report = charge_equivalence(max_length=8, max_letter=4)
        c.check(report.passed, report.text())


def test_criterion_6_and_7_extremal_uniqueness_and_maj():
    with Criterion(6, "one extremal filling per row family equal to greedy, |shape|<=6 n=3", 30.0) as c6:
        report = uniqueness(max_size=6, n=3)
        unique_lines = [l for l in report.lines if "unique per family" in l]
        c6.check(unique_lines and all(l.startswith("PASS") for l in unique_lines),
                 "; ".join(l for l in unique_lines if not l.startswith("PASS")))
    with Criterion(7, "maj == charge/cocharge of reading word on every extremal filling", None) as c7:
        maj_lines = [l for l in report.lines if " maj == " in l]
        c7.check(maj_lines and all(l.startswith("PASS") for l in maj_lines),
                 "; ".join(l for l in maj_lines if not l.startswith("PASS")))


def test_criterion_8_conjecture_desk_scale():
    with Criterion(8, "profiles equal and complete matching, |shape|<=6 n=3", 60.0) as c:
        report = conjecture(max_size=6, n=3)
        c.check(report.passed, report.text())


def test_criterion_9_thread_determinism(tmp_path):
    with Criterion(9, "verify reports identical with --threads 1 and --threads 4", None) as c:
        for suite in SUITES:
            outputs = []
            for threads in ("1", "4"):
                target = tmp_path / f"{suite}-{threads}.txt"
                args = ["verify", suite, "--threads", threads, "--out", str(target)]
                args += ["--max-length", "6"] if suite == "charge-equiv" else ["--max-size", "4"]
                code = main(args)
                c.check(code == 0, f"{suite} exit {code}")
                outputs.append(target.read_bytes())
            c.check(outputs[0] == outputs[1], f"{suite} reports differ")
