import pytest

from vdwsurf.validate import (
    run_all,
    run_suite,
    suite_bc,
    suite_limits,
    suite_symmetry,
    suite_threeway,
)


def test_bc_suite_passes():
    report = suite_bc(seed=42, n_pairs=200)
    assert report.passed, "\n".join(report.lines())
    names = [c.name for c in report.checks]
    assert any("plane" in n for n in names)
    assert any("gsphere" in n for n in names)
    assert any("bosshat" in n for n in names)
    assert any("isolated" in n for n in names)


def test_symmetry_suite_passes():
    report = suite_symmetry(seed=42, n_pairs=200)
    assert report.passed, "\n".join(report.lines())
    assert all(c.residual <= 1e-11 for c in report.checks)


def test_limits_suite_passes():
    report = suite_limits()
    assert report.passed, "\n".join(report.lines())


def test_threeway_suite_passes():
    report = suite_threeway()
    assert report.passed, "\n".join(report.lines())
    assert all(c.tolerance == 1e-5 for c in report.checks)


def test_reports_are_deterministic_for_fixed_seed():
    a = suite_bc(seed=7, n_pairs=50)
    b = suite_bc(seed=7, n_pairs=50)
    assert a == b
    c = suite_bc(seed=8, n_pairs=50)
    assert c != a


def test_run_suite_dispatch():
    assert run_suite("symmetry", seed=1).suite == "symmetry"
    with pytest.raises(ValueError):
        run_suite("nosuch")
    reports = run_all(seed=1)
    assert [r.suite for r in reports] == ["bc", "symmetry", "limits", "threeway"]
    assert all(r.passed for r in reports)


def test_report_lines_format():
    report = suite_limits()
    lines = report.lines()
    assert lines[0].startswith("suite limits:")
    assert any("PASS" in line for line in lines[1:])
    assert all(("PASS" in line) or ("FAIL" in line) for line in lines[1:])
