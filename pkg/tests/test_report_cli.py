"""Report serialization and the command line wrapper."""

import json
import subprocess
import sys

import pytest

from qtrin.report import (
    CaseResult,
    SuiteReport,
    render_json,
    render_text,
    report_from_obj,
    report_to_obj,
)
from qtrin.suites import SuiteOptions, UsageError, build_cases, run_suite


def small_report() -> SuiteReport:
    return SuiteReport(
        suite="demo",
        cases=(
            CaseResult("demo-a", {"L": 3}, "pass", 12),
            CaseResult("demo-b", {"L": 4}, "fail", 7, "a=1: q - q^2"),
            CaseResult("demo-c", {}, "error", 0, "ValueError: no"),
        ),
    )


def test_report_invariants():
    r = small_report()
    assert r.summary() == {"pass": 1, "fail": 1, "error": 1}
    assert not r.all_passed()
    empty = SuiteReport(suite="demo", cases=())
    assert empty.summary() == {"pass": 0, "fail": 0, "error": 0}
    assert empty.all_passed()
    with pytest.raises(ValueError):
        SuiteReport(suite="dup", cases=(r.cases[0], r.cases[0]))
    with pytest.raises(ValueError):
        CaseResult("x", {}, "flaky", 0)


def test_json_round_trip_drops_timings_only():
    r = small_report()
    obj = report_to_obj(r)
    assert [c["millis"] for c in obj["cases"]] == [0, 0, 0]
    back = report_from_obj(obj)
    assert back.suite == r.suite
    assert [c.case_id for c in back.cases] == [c.case_id for c in r.cases]
    assert [c.status for c in back.cases] == [c.status for c in r.cases]
    assert [c.detail for c in back.cases] == [c.detail for c in r.cases]
    # a second serialization is byte-identical
    assert render_json(report_from_obj(obj)) == render_json(r)


def test_text_rendering_keeps_timings():
    text = render_text(small_report())
    assert "demo-b" in text and "12 ms" in text
    assert text.strip().endswith("1 passed, 1 failed, 1 errored")


def test_run_suite_reports_are_reproducible():
    a = run_suite("bailey", SuiteOptions(lmax=2, seed=11))
    b = run_suite("bailey", SuiteOptions(lmax=2, seed=11))
    assert render_json(a) == render_json(b)
    assert a.all_passed()


def test_threaded_run_matches_serial():
    serial = run_suite("trinom", SuiteOptions(lmax=5))
    threaded = run_suite("trinom", SuiteOptions(lmax=5, threads=2))
    assert render_json(serial) == render_json(threaded)


def test_case_identifiers_are_unique_across_all():
    cases = build_cases("all", SuiteOptions())
    ids = [cid for cid, _, _ in cases]
    assert len(ids) == len(set(ids))


def test_option_validation():
    with pytest.raises(UsageError):
        SuiteOptions(lmax=-1)
    with pytest.raises(UsageError):
        SuiteOptions(p=5)
    with pytest.raises(UsageError):
        SuiteOptions(threads=0)
    with pytest.raises(UsageError):
        run_suite("nosuch", SuiteOptions())


def run_cli(*args: str):
    return subprocess.run(
        [sys.executable, "-m", "qtrin.cli", *args],
        capture_output=True,
        text=True,
    )


def test_cli_show():
    done = run_cli("show", "qbin", "4", "2")
    assert done.returncode == 0
    assert done.stdout.strip() == "1 + q + 2*q^2 + q^3 + q^4"
    done = run_cli("show", "tn", "0", "5", "0")
    assert done.stdout.startswith("q^(1/2)")


def test_cli_verify_exit_codes(tmp_path):
    out = tmp_path / "report.json"
    done = run_cli("verify", "binom", "--lmax", "4", "--json", str(out))
    assert done.returncode == 0
    assert "passed, 0 failed" in done.stdout
    obj = json.loads(out.read_text())
    assert obj["suite"] == "binom"
    assert obj["summary"]["fail"] == 0

    done = run_cli("verify", "nosuch")
    assert done.returncode == 2
    done = run_cli("show", "qbin", "1")
    assert done.returncode == 2
    done = run_cli("verify", "props", "--p", "3")
    assert done.returncode == 2


def test_cli_reports_are_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "bailey", "--lmax", "2", "--seed", "5"]
    assert run_cli(*argv, "--json", str(first)).returncode == 0
    assert run_cli(*argv, "--json", str(second)).returncode == 0
    assert first.read_bytes() == second.read_bytes()
