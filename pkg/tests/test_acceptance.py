"""Acceptance suite: the twelve headline checks at their contract scan sizes.

Each test runs one end-to-end check, prints a single pass/fail status
line (visible under ``pytest -s`` or in captured output), asserts the
check's own verdict plus its frozen headline numbers, and enforces the
stated runtime budget where one exists.
"""

import time

from blowup_collections.verify import (
    check_augmentation,
    check_chi_agreement,
    check_diophantine,
    check_enumeration,
    check_family_chains,
    check_point_vanishing,
    check_line_vanishing,
    check_cubic_vanishing,
    check_relations,
    check_tables,
)


def _drive(criterion: int, result, elapsed: float, limit: float | None) -> None:
    mark = "PASS" if result.ok else "FAIL"
    budget = "" if limit is None else f" [{elapsed:.2f}s < {limit:g}s]"
    print(f"[{mark}] criterion {criterion:02d}: {result.name}: {result.summary}{budget}")
    assert result.ok, (result.summary, result.details)
    if limit is not None:
        assert elapsed < limit, f"criterion {criterion} took {elapsed:.2f}s"


def _timed(check, *args):
    start = time.perf_counter()
    result = check(*args)
    return result, time.perf_counter() - start


def test_criterion_01_point_vanishing_classification():
    result, elapsed = _timed(check_point_vanishing, 30)
    _drive(1, result, elapsed, 1.0)
    assert result.summary.startswith("66 vanishing classes in window 30")


def test_criterion_02_line_vanishing_classification():
    result, elapsed = _timed(check_line_vanishing, 30)
    _drive(2, result, elapsed, 1.0)
    assert result.summary.startswith("121 vanishing classes in window 30")


def test_criterion_03_cubic_vanishing_classification():
    result, elapsed = _timed(check_cubic_vanishing, 30)
    _drive(3, result, elapsed, 1.0)
    assert result.summary == "window 30: 38 confirmed, 2 undecided, 3681 refuted"


def test_criterion_04_euler_characteristic_cross_validation():
    result, elapsed = _timed(check_chi_agreement, 30)
    _drive(4, result, elapsed, 1.0)


def test_criterion_05_compatibility_tables_golden():
    result, elapsed = _timed(check_tables, 15)
    _drive(5, result, elapsed, None)
    assert result.summary == "186 cells certified over parameter window 15"


def test_criterion_06_point_enumeration():
    result, elapsed = _timed(check_enumeration, "point", 15)
    _drive(6, result, elapsed, 10.0)
    assert "(90 sequences in window 15)" in result.summary
    assert "confirmed families: 9" in result.summary


def test_criterion_07_line_enumeration():
    result, elapsed = _timed(check_enumeration, "line", 15)
    _drive(7, result, elapsed, 30.0)
    assert "(1624 sequences in window 15)" in result.summary
    assert "confirmed families: 2" in result.summary


def test_criterion_08_cubic_enumeration():
    result, elapsed = _timed(check_enumeration, "cubic", 15)
    _drive(8, result, elapsed, 60.0)
    assert "(54 sequences in window 15)" in result.summary
    assert "confirmed families: 15" in result.summary
    assert "undetermined: 0" in result.summary


def test_criterion_09_conic_diophantine_solutions():
    result, elapsed = _timed(check_diophantine, 50)
    _drive(9, result, elapsed, 30.0)
    assert result.summary == "4 ordered solutions in window 50, all duals decided"


def test_criterion_10_mutation_relations():
    result, elapsed = _timed(check_relations, 5)
    _drive(10, result, elapsed, 10.0)
    assert result.summary == "146 chain walks realized over parameter range 5"


def test_criterion_11_augmentation_lifts():
    result, elapsed = _timed(check_augmentation)
    _drive(11, result, elapsed, None)


def test_criterion_12_within_family_chain_laws():
    point, p_elapsed = _timed(check_family_chains, "point", 10)
    cubic, c_elapsed = _timed(check_family_chains, "cubic", 10)
    _drive(12, point, p_elapsed + c_elapsed, None)
    assert cubic.ok, (cubic.summary, cubic.details)
    print(f"[PASS] criterion 12: {cubic.name}: {cubic.summary}")
