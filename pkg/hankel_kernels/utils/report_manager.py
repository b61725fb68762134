"""Report management - save, load and render verification reports"""
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd


@dataclass
class VerificationReport:
    """
    Outcome of one task

    A task passes only if every exact check holds and every numeric
    residual is below its tolerance.
    """

    task_id: str
    op: str
    exact: Dict[str, Any] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    numeric: List[Dict[str, Any]] = field(default_factory=list)
    provenance: Dict[str, str] = field(default_factory=dict)
    error: Optional[str] = None
    exit_code: int = 0

    @property
    def passed(self) -> bool:
        return self.error is None and all(self.checks.values()) \
            and all(summary.get("passed", False) for summary in self.numeric)

    def to_json(self):
        return {
            "task": self.task_id,
            "op": self.op,
            "passed": self.passed,
            "exact": self.exact,
            "checks": self.checks,
            "numeric": self.numeric,
            "provenance": self.provenance,
            "error": self.error,
            "exit_code": self.exit_code,
        }

    @classmethod
    def from_json(cls, data) -> "VerificationReport":
        return cls(data["task"], data["op"], data.get("exact", {}), data.get("checks", {}),
                   data.get("numeric", []), data.get("provenance", {}), data.get("error"),
                   data.get("exit_code", 0))


class ReportManager:
    """Manages verification report files"""

    def __init__(self, reports_folder=None, logger=None):
        if reports_folder is None:
            reports_folder = Path.cwd() / "reports"
        self.reports_folder = Path(reports_folder)
        self.logger = logger or self._default_logger

    @staticmethod
    def _default_logger(message, level='INFO'):
        print(f"[{level}] {message}")

    @staticmethod
    def sanitize_filename(name):
        """Remove invalid filename characters"""
        name = re.sub(r'[<>:"/\\|?*]', '', name)
        name = name.replace(' ', '_')
        return name[:50]

    # -- rendering ----------------------------------------------------------

    @staticmethod
    def to_frame(reports: List[VerificationReport]) -> pd.DataFrame:
        """One row per task"""
        return pd.DataFrame([{
            "task": r.task_id,
            "op": r.op,
            "checks": f"{sum(r.checks.values())}/{len(r.checks)}",
            "max residual": max((max(s.get("residuals", {}).values(), default=0.0)
                                 for s in r.numeric), default=0.0),
            "status": "PASS" if r.passed else "FAIL",
        } for r in reports], columns=["task", "op", "checks", "max residual", "status"])

    @staticmethod
    def _value(value) -> str:
        if isinstance(value, (dict, list)):
            return json.dumps(value, ensure_ascii=False)
        return str(value)

    def render_text(self, reports: List[VerificationReport], title: str = "VERIFICATION REPORT") -> str:
        lines = ["=" * 70, title, "=" * 70]
        if not reports:
            lines.append("No tasks.")
            lines.append("=" * 70)
            return "\n".join(lines) + "\n"
        lines.append(self.to_frame(reports).to_string(index=False))
        for report in reports:
            lines.append("")
            lines.append(f"[{report.task_id}] {report.op}: {'PASS' if report.passed else 'FAIL'}")
            if report.error:
                lines.append(f"  error: {report.error}")
            for key, value in report.exact.items():
                lines.append(f"  {key}: {self._value(value)}")
            if report.checks:
                checks = pd.DataFrame([{"check": k, "holds": v} for k, v in report.checks.items()])
                lines.extend("  " + row for row in checks.to_string(index=False).splitlines())
            for summary in report.numeric:
                residuals = ", ".join(f"{k}={v:.3e}" for k, v in summary.get("residuals", {}).items())
                lines.append(f"  numeric {summary.get('kind')}: {residuals or 'ranks only'} "
                             f"(tolerance {summary.get('tolerance')})")
            for key, source in report.provenance.items():
                lines.append(f"  {key} <- {source}")
        passed = sum(r.passed for r in reports)
        lines.extend(["", "=" * 70, f"{passed}/{len(reports)} tasks passed", "=" * 70])
        return "\n".join(lines) + "\n"

    @staticmethod
    def render_json(reports: List[VerificationReport]) -> str:
        return json.dumps({"reports": [r.to_json() for r in reports],
                           "passed": all(r.passed for r in reports)},
                          indent=2, ensure_ascii=False, sort_keys=True) + "\n"

    # -- persistence --------------------------------------------------------

    def save_reports(self, name, reports: List[VerificationReport], fmt: str = "json"):
        """
        Save reports under the reports folder

        Args:
            name: Report set name, usually the document stem
            reports: Reports to save
            fmt: 'json' or 'text'

        Returns:
            Path to the saved file, or None if writing failed
        """
        self.reports_folder.mkdir(parents=True, exist_ok=True)
        suffix = "json" if fmt == "json" else "txt"
        report_file = self.reports_folder / f"{self.sanitize_filename(name)}.{suffix}"
        content = self.render_json(reports) if fmt == "json" else self.render_text(reports)
        try:
            with open(report_file, 'w', encoding='utf-8') as f:
                f.write(content)
            self.logger(f"Saved report to {report_file}", 'SUCCESS')
            return report_file
        except OSError as e:
            self.logger(f"Failed to save report: {e}", 'ERROR')
            return None

    def load_reports(self, name) -> Optional[List[VerificationReport]]:
        """Load a saved JSON report set, or None if it does not exist"""
        report_file = self.reports_folder / f"{self.sanitize_filename(name)}.json"
        if not report_file.exists():
            return None
        try:
            with open(report_file, 'r', encoding='utf-8') as f:
                data = json.load(f)
            return [VerificationReport.from_json(item) for item in data["reports"]]
        except (OSError, KeyError, json.JSONDecodeError) as e:
            self.logger(f"Failed to load report: {e}", 'ERROR')
            return None

    def list_reports(self):
        """Names of saved JSON report sets, sorted"""
        if not self.reports_folder.exists():
            return []
        return sorted(f.stem for f in self.reports_folder.glob("*.json"))

    def delete_reports(self, name):
        """Delete a saved report set"""
        deleted = False
        for suffix in ("json", "txt"):
            report_file = self.reports_folder / f"{self.sanitize_filename(name)}.{suffix}"
            if report_file.exists():
                report_file.unlink()
                deleted = True
        return deleted
