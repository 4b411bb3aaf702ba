"""Structured pass/fail reports produced by the verification suites."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

#: default largest n for suites whose cost is quadratic in n!
DEFAULT_MAX_N = 5
#: largest n reachable with ``extended=True``
EXTENDED_MAX_N = 6


class GuardError(ValueError):
    """Raised when a computation is requested beyond its size guard."""


def check_guard(n: int, extended: bool = False, *, limit: int = DEFAULT_MAX_N,
                extended_limit: int = EXTENDED_MAX_N) -> None:
    if n < 0:
        raise GuardError("n must be nonnegative")
    if n > extended_limit:
        raise GuardError(f"n = {n} exceeds the hard limit {extended_limit}")
    if n > limit and not extended:
        raise GuardError(f"n = {n} exceeds the default limit {limit}; use the extended mode")


@dataclass
class CaseResult:
    label: str
    passed: bool
    witness: str | None = None

    def to_obj(self) -> dict:
        out = {"case": self.label, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    suite: str
    n: int
    cases: list[CaseResult] = field(default_factory=list)
    stop_on_failure: bool = True

    def add(self, label: str, passed: bool, witness: str | None = None) -> bool:
        """Record a case; returns False when the suite should stop."""
        self.cases.append(CaseResult(label, bool(passed), None if passed else witness))
        return passed or not self.stop_on_failure

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite} n={self.n}: {len(self.cases) - len(self.failures)}/{len(self.cases)} cases"

    def to_text(self, verbose: bool = False) -> str:
        lines = [self.summary()]
        for c in self.cases:
            if verbose or not c.passed:
                lines.append(f"  {'ok  ' if c.passed else 'FAIL'} {c.label}")
                if c.witness:
                    lines.extend("       " + w for w in c.witness.splitlines())
        return "\n".join(lines)

    def to_obj(self) -> dict:
        return {"suite": self.suite, "n": self.n, "passed": self.passed,
                "cases": [c.to_obj() for c in self.cases]}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2)
