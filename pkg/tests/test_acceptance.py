"""End-to-end acceptance sweeps.

One test per criterion; each drives the public suite runner at the full
stated scale, so the verbose test report carries exactly one pass/fail
line per criterion.
"""

import time

from qtrin.report import render_json
from qtrin.suites import SuiteOptions, run_suite


def _run_clean(suite: str, budget_s: float, **options) -> None:
    begin = time.perf_counter()
    report = run_suite(suite, SuiteOptions(**options))
    elapsed = time.perf_counter() - begin
    bad = [c for c in report.cases if c.status != "pass"]
    assert not bad, [(c.case_id, c.detail) for c in bad]
    assert elapsed < budget_s, f"{suite} took {elapsed:.1f}s, budget {budget_s}s"
    print(f"{suite}: {report.summary()['pass']} cases in {elapsed:.1f}s")


def test_criterion_1_connection_and_orthogonality_to_l20():
    _run_clean("connect", 60.0, lmax=20)


def test_criterion_2_binomial_summations_and_recurrences():
    _run_clean("appendix", 25.0, lmax=8)
    _run_clean("binom", 5.0, lmax=30)


def test_criterion_3_fermionic_bosonic_sweep_to_l14():
    _run_clean("virasoro", 300.0, lmax=14)


def test_criterion_4_quadratic_transformations_to_l12():
    _run_clean("props", 600.0, lmax=12)


def test_criterion_5_named_polynomial_identities():
    _run_clean("section3", 180.0)


def test_criterion_6_limits_and_characters():
    _run_clean("limits", 120.0)


def test_criterion_7_bailey_machinery():
    _run_clean("bailey", 180.0)


def test_criterion_8_reports_are_byte_identical():
    options = SuiteOptions(seed=3)
    first = run_suite("all", options)
    second = run_suite("all", options)
    assert first.all_passed()
    assert render_json(first) == render_json(second)
    print(f"verify all: {len(first.cases)} cases, reports byte-identical")
