"""Acceptance suite: every criterion runs at its stated bound with exact
(zero-tolerance) comparisons and prints one PASS/FAIL line.

The heavy lifting lives in the check registry; criteria that name specific
values additionally assert them directly here.
"""

import os
import subprocess
import sys
import time
from math import comb
from pathlib import Path

from permcross.bijections import adjudicate_cor43
from permcross.checks import run_check
from permcross.distributions import tableau_value
from permcross.perm import crossings, nestings

REPO = Path(__file__).resolve().parents[1]


def _report(criterion: str, ok: bool) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}")
    assert ok, criterion


def _check_passes(check_id: str, bound: int | None = None) -> bool:
    result = run_check(check_id, bound)
    if result.status != "pass":
        print(f"  {check_id} -> {result.status}; witnesses: {result.witnesses[:2]}")
    return result.status == "pass"


def test_c01_figure_values_with_witnesses():
    word = (4, 7, 3, 5, 1, 2, 6)
    crs, crs_pairs = crossings(word)
    nes, nes_pairs = nestings(word)
    ok = (
        crs == 3
        and nes == 3
        and set(crs_pairs) == {(1, 2), (5, 6), (6, 7)}
        and set(nes_pairs) == {(2, 4), (3, 5), (3, 6)}
        and _check_passes("fig-1")
    )
    _report("01 arc-diagram counts and witnesses", ok)


def test_c02_catalan_counts():
    _report("02 Catalan sizes for all six patterns, n<=9", _check_passes("catalan", 9))


def test_c03_crs_wilf_equivalence():
    _report("03 crs distributions of 321/132/213 agree, n<=9", _check_passes("eq-1", 9))


def test_c04_continued_fraction():
    _report("04 continued fraction matches enumeration, n<=9", _check_passes("cfrac-321", 9))


def test_c05_one_at_identities():
    _report("05 one-at-1 and one-at-2 identities, n<=8", _check_passes("thm-2.6", 8))


def test_c06_position_symmetry_tester():
    result = run_check("conj-2.7", 9)
    ok = result.status in ("pass", "finding")
    if result.status == "finding":
        print(f"  conj-2.7 finding (non-gating): {result.witnesses[:2]}")
    _report("06 open position symmetry tested to n<=9 (non-gating)", ok)


def test_c07_gf_functional_equation():
    _report("07 F(312)(1 - zF(231)) = 1 mod z^10", _check_passes("thm-2.8", 9))


def test_c08_binomial_distribution_and_coefficients():
    ok = _check_passes("thm-3.1", 10) and _check_passes("cor-3.2", 10)
    _report("08 ((1+q)^(n-1)-1+q)/q and its coefficients, n<=10", ok)


def test_c09_one_at_two_closed_form():
    ok = _check_passes("thm-1.1", 10) and _check_passes("cor-3.4", 10)
    _report("09 (1+q)^(n-2) for the slot-2 classes, n<=10", ok)


def test_c10_tableau_vs_classes_and_printed_table():
    ok = _check_passes("thm-1.2", 9) and _check_passes("table-1", 12)
    # spot-assert the printed middle cells once more, directly
    ok = ok and tableau_value(6, 2).to_text() == "1+2q+3q^2+2q^3"
    ok = ok and tableau_value(4, 0).to_text() == "7+q"
    _report("10 tableau = tail-class distributions; 22 cells; powers of two", ok)


def test_c11_polygonal_numbers_and_tail_shift():
    ok = _check_passes("cor-4.5", 12) and _check_passes("thm-4.6", 9)
    ok = ok and all(
        tableau_value(n, 0).evaluate(0) == comb(n, 2) + 1 for n in range(13)
    )
    _report("11 central polygonal numbers; (213,231) classes vs cell (n+1,1)", ok)


def test_c12_lemma_suite_and_exponent_adjudication():
    ok = all(
        _check_passes(check_id, 7)
        for check_id in ("lem-2.1", "lem-2.2", "lem-2.4", "lem-4.2")
    )
    report = adjudicate_cor43(9)
    decisive = report.winner in ("statement", "proof")
    if decisive:
        loser_rows = [
            r for r in report.rows if not (r.proof_ok if report.winner == "statement" else r.statement_ok)
        ]
        print(
            f"  cor-4.3 winner: the {report.winner} exponent;"
            f" the other formula fails on {len(loser_rows)} of {len(report.rows)} rows"
        )
    ok = ok and decisive and _check_passes("cor-4.3", 9)
    _report("12 crossing-change lemmas (exhaustive + random) and decisive exponent table", ok)


def test_c13_maxdrop_class_identity():
    ok = _check_passes("prop-5.1", 9) and _check_passes("inv-exc-crs", 9)
    _report("13 (321,231)-avoiders = maxdrop<=1; inv = exc + crs, n<=9", ok)


def test_c14_joint_distributions_and_adjudicated_label():
    ok = _check_passes("thm-5.2", 9) and _check_passes("eq-dokos", 9)
    chung = run_check("eq-chung", 9)
    recorded = bool(chung.witnesses) and "matching_classes" in chung.witnesses[0]
    if recorded:
        print(f"  eq-chung adjudication: {chung.witnesses[0]}")
    ok = ok and chung.status == "pass" and recorded
    _report("14 rational joint distributions; class label adjudicated and recorded", ok)


def test_c15_eulerian_and_fibonacci():
    ok = _check_passes("cor-5.3", 9) and _check_passes("cor-5.4", 10)
    _report("15 Eulerian refinement, n<=9; Fibonacci noncrossing counts, n<=10", ok)


def test_c16_verify_all_end_to_end():
    env = dict(os.environ)
    env["PYTHONPATH"] = str(REPO / "src") + os.pathsep + env.get("PYTHONPATH", "")
    start = time.monotonic()
    proc = subprocess.run(
        [sys.executable, "-m", "permcross", "verify", "all"],
        capture_output=True,
        text=True,
        env=env,
        timeout=120,
    )
    elapsed = time.monotonic() - start
    ok = proc.returncode == 0 and elapsed < 60.0
    print(f"  verify all: exit {proc.returncode} in {elapsed:.1f}s")
    if proc.returncode != 0:
        print(proc.stdout[-2000:])
    _report("16 `verify all` exits 0 in under 60 s", ok)
