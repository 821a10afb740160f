"""Machine-readable pass/fail reports shared by all verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class Check:
    name: str
    passed: bool
    witness: Optional[dict] = None
    inputs: Optional[dict] = None
    details: Optional[dict] = None


@dataclass
class Report:
    suite: str
    spec: dict
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, witness=None, inputs=None, details=None):
        self.checks.append(Check(name, bool(passed), witness, inputs, details))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "spec": self.spec,
            "checks": [
                {
                    "check": c.name,
                    "passed": c.passed,
                    **({"witness": c.witness} if c.witness else {}),
                    **({"inputs": c.inputs} if c.inputs else {}),
                    **({"details": c.details} if c.details else {}),
                }
                for c in self.checks
            ],
            "failures": [
                {
                    "check": c.name,
                    "witness": c.witness,
                    "inputs": c.inputs,
                }
                for c in self.checks
                if not c.passed
            ],
        }


def merge(suite: str, spec: dict, reports) -> Report:
    out = Report(suite, spec)
    for r in reports:
        for c in r.checks:
            out.checks.append(
                Check(f"{r.suite}:{c.name}", c.passed, c.witness, c.inputs, c.details)
            )
    return out
