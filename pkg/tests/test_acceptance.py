"""Acceptance criteria, one pass/fail line each.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; both
print the same nine lines.
"""

import time

import pytest

from quotcalc import keylemma as kl
from quotcalc import suites


def _key_lemma_sweep():
    cases = 0
    for kin in kl.sweep_inputs(5):
        cases += 1
        fail = kl.check_input(kin)
        if fail:
            return cases, fail
    return cases, None


def _twisted_sweep():
    cases = 0
    for kin in kl.sweep_inputs(5):
        for j in range(kin.gap + 1):
            cases += 1
            fail = kl.check_twisted(kin, j)
            if fail:
                return cases, fail
    return cases, None


def _report(fn, *args, **kw):
    rep = fn(*args, **kw)
    return rep.cases, rep.failure


def _span_literal():
    """Full stated probe range; the proved subrange is reported alongside."""
    proved = suites.run_span_suite(literal=False)
    literal = suites.run_span_suite(literal=True)
    if literal.ok:
        return literal.cases, None
    note = "proved range b <= r or a+2 <= b <= a+r+1: " + ("all InSpan" if proved.ok else proved.failure)
    return literal.cases, f"{literal.failure} ({note})"


CRITERIA = [
    (1, "Key Lemma sweep n <= 5", _key_lemma_sweep, 120),
    (2, "Lascoux specialization and Eagon-Northcott ranks", lambda: _report(suites.run_lascoux_suite, 5), None),
    (3, "twisted Key Lemma n <= 5", _twisted_sweep, None),
    (4, "BBW vs Cech and Kapranov tables", lambda: _report(suites.run_bbw_suite), 10),
    (5, "Kapranov resolution conservation on Gr_2(4)", lambda: _report(suites.run_kapranov_suite), None),
    (6, "tilting up to Sym-degree 4", lambda: _report(suites.run_tilting_suite, 4), None),
    (7, "motivic identities", lambda: _report(suites.run_motivic_suite, 6, seed=0), 5),
    (8, "SOD catalog over parameters <= 6", lambda: _report(suites.run_sod_suite, 6), None),
    (9, "K-theory span shadow on Gr_2(4), Gr_2(5)", _span_literal, None),
]


def evaluate(number):
    _, title, fn, budget = CRITERIA[number - 1]
    t0 = time.perf_counter()
    cases, failure = fn()
    secs = time.perf_counter() - t0
    if failure is None and budget is not None and secs > budget:
        failure = f"took {secs:.1f}s, budget {budget}s"
    status = "PASS" if failure is None else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({cases} cases, {secs:.2f}s)"
    if failure:
        line += f": {failure}"
    return failure is None, line


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    for number, *_ in CRITERIA:
        print(evaluate(number)[1], flush=True)
