"""Pass/fail reports produced by the exhaustive verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

MAX_COUNTEREXAMPLES = 10


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexamples: list[Any] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def tick(self, ok: bool, witness: Any = None) -> bool:
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(witness)
        return ok

    def to_dict(self) -> dict:
        d = {
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "counterexamples": [_jsonable(c) for c in self.counterexamples],
        }
        if self.notes:
            d["notes"] = list(self.notes)
        return d


@dataclass
class Report:
    title: str
    checks: dict[str, CheckResult] = field(default_factory=dict)
    info: dict[str, Any] = field(default_factory=dict)

    def check(self, name: str) -> CheckResult:
        if name not in self.checks:
            self.checks[name] = CheckResult(name)
        return self.checks[name]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": {name: c.to_dict() for name, c in self.checks.items()},
            **({"info": _jsonable(self.info)} if self.info else {}),
        }


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return str(obj)
