"""Acceptance gate: every named verification criterion, one line each.

All comparisons are exact integers with zero tolerance; the whole module is
budgeted to run in well under five seconds.
"""

import time

import pytest

from flophelix.verification import CRITERIA, run_all, run_check

CRITERION_NAMES = [name for name, _ in CRITERIA]


@pytest.mark.parametrize("name", CRITERION_NAMES)
def test_criterion(name, capsys):
    result = run_check(name)
    with capsys.disabled():
        print(f"{result.name}: {'PASS' if result.passed else 'FAIL'}")
    assert result.passed, (result.expected, result.actual)


def test_verify_covers_exactly_the_criteria():
    expected = ["numerics_table", "knitting_oracle", "placement_invariance",
                "gv_assembly", "helix_consistency", "kclass_mutation",
                "monodromy_words", "classification_coherence",
                "puncture_count"]
    assert CRITERION_NAMES == expected
    assert [r.name for r in run_all()] == expected


def test_suite_runtime_budget():
    start = time.monotonic()
    results = run_all()
    elapsed = time.monotonic() - start
    assert all(r.passed for r in results)
    assert elapsed < 5.0, f"verification took {elapsed:.2f}s"
