"""Verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field

_VIOLATION_CAP = 200


@dataclass
class CheckReport:
    """Outcome of one verifier: pass/fail plus the exact violations found."""

    check: str
    passed: bool
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def add_violation(self, violation: dict) -> None:
        self.passed = False
        if len(self.violations) < _VIOLATION_CAP:
            self.violations.append(violation)
        else:
            self.details["violations_truncated"] = self.details.get("violations_truncated", 0) + 1

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "pass": self.passed,
            "checked": self.checked,
            "violations": self.violations,
        }
        if self.details:
            out["details"] = self.details
        return out

    def summary(self) -> str:
        word = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f", {len(self.violations)} violation(s)"
        return f"{word} {self.check} ({self.checked} checked{tail})"
