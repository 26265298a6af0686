"""Named pass/fail checks with witnesses, collected into reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, witness=None):
        self.checks.append(Check(name, bool(passed), None if passed else witness))
        return passed

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    def to_dict(self):
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}

    def summary(self):
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            extra = f"  witness={c.witness}" if not c.passed else ""
            lines.append(f"  [{mark}] {c.name}{extra}")
        return "\n".join(lines)


class CheckFailed(Exception):
    """Raised when a verification has to stop; carries the report so far."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
