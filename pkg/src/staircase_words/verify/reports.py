"""Verification report records and renderers."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


@dataclass
class VerificationReport:
    """One check: what was compared, what came out, and whether it passed."""

    subject: str
    params: dict
    expected: object
    observed: object
    residual: object
    passed: bool
    notes: str = ""

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "expected": _jsonable(self.expected),
            "observed": _jsonable(self.observed),
            "residual": _jsonable(self.residual),
            "pass": self.passed,
            "notes": self.notes,
        }


@dataclass
class SuiteResult:
    suite: str
    reports: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "pass": self.passed,
            "reports": [r.to_json_dict() for r in self.reports],
        }

    def to_json(self) -> str:
        """The reports as a bare JSON array, one object per check."""
        return json.dumps([r.to_json_dict() for r in self.reports], indent=2, sort_keys=True)


def render_text_table(reports) -> str:
    """Fixed-width summary, one line per report."""
    lines = []
    width = max([len(r.subject) for r in reports] + [7])
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        residual = "" if r.residual is None else f"  residual={r.residual}"
        notes = f"  [{r.notes}]" if r.notes else ""
        lines.append(f"{status}  {r.subject:<{width}}{residual}{notes}")
    total = sum(1 for r in reports if r.passed)
    lines.append(f"{total}/{len(reports)} checks passed")
    return "\n".join(lines)
