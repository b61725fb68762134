"""
Test verification report rendering and persistence
"""
import json

import pytest

from hankel_kernels.utils.report_manager import ReportManager, VerificationReport


def quiet(message, level='INFO'):
    pass


def sample_reports():
    passing = VerificationReport("kernel", "kernel", exact={"defect": 1},
                                 checks={"kernel matches": True},
                                 numeric=[{"kind": "inner", "passed": True,
                                           "residuals": {"identity": 1e-14}, "tolerance": 1e-8}],
                                 provenance={"symbol": "object phi"})
    failing = VerificationReport("cyclic", "cyclic", checks={"agree": False})
    broken = VerificationReport("gcd", "gcd", error="DocumentError: missing 'inputs'", exit_code=2)
    return [passing, failing, broken]


@pytest.fixture
def manager(tmp_path):
    return ReportManager(tmp_path / "reports", logger=quiet)


def test_pass_requires_checks_numeric_and_no_error():
    passing, failing, broken = sample_reports()
    assert passing.passed
    assert not failing.passed
    assert not broken.passed
    residual_too_large = VerificationReport("k", "kernel", numeric=[{"passed": False}])
    assert not residual_too_large.passed


def test_render_json_is_deterministic(manager):
    first = manager.render_json(sample_reports())
    second = manager.render_json(sample_reports())
    assert first == second
    data = json.loads(first)
    assert data["passed"] is False
    assert [r["task"] for r in data["reports"]] == ["kernel", "cyclic", "gcd"]
    assert data["reports"][2]["exit_code"] == 2


def test_render_text_summary(manager):
    text = manager.render_text(sample_reports(), "VERIFICATION REPORT: sample.json")
    assert text.startswith("=" * 70)
    assert "1/3 tasks passed" in text
    assert "[gcd] gcd: FAIL" in text
    assert "symbol <- object phi" in text


def test_render_text_without_tasks(manager):
    assert "No tasks." in manager.render_text([])


def test_save_load_list_delete(manager):
    path = manager.save_reports("double zbar", sample_reports())
    assert path.name == "double_zbar.json"
    assert manager.list_reports() == ["double_zbar"]
    loaded = manager.load_reports("double zbar")
    assert [r.to_json() for r in loaded] == [r.to_json() for r in sample_reports()]
    assert manager.save_reports("double zbar", sample_reports(), "text").suffix == ".txt"
    assert manager.delete_reports("double zbar")
    assert manager.list_reports() == []
    assert manager.load_reports("double zbar") is None


def test_sanitize_filename():
    assert ReportManager.sanitize_filename('a/b:c "d"') == "abc_d"
    assert len(ReportManager.sanitize_filename("x" * 80)) == 50


if __name__ == "__main__":
    print("=" * 70)
    print("REPORT MANAGER TESTS")
    print("=" * 70)
    raise SystemExit(pytest.main([__file__, "-v"]))
