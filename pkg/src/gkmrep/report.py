"""Pass/fail records collected by the checking routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Assertion:
    name: str
    passed: bool
    detail: str = ""
    # observations are reported but never count as failures
    observational: bool = False

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.observational:
            out["observational"] = True
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    items: list[Assertion] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, condition: bool, detail: str = "") -> bool:
        self.items.append(Assertion(name, bool(condition), detail))
        return bool(condition)

    def observe(self, name: str, value: bool, detail: str = "") -> None:
        self.items.append(Assertion(name, bool(value), detail, observational=True))

    def extend(self, other: "Report", prefix: str | None = None) -> None:
        tag = other.title if prefix is None else prefix
        for a in other.items:
            self.items.append(Assertion(f"{tag}: {a.name}" if tag else a.name, a.passed, a.detail, a.observational))

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.items if not a.observational)

    def failures(self) -> list[Assertion]:
        return [a for a in self.items if not a.passed and not a.observational]

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "ok": self.ok,
            "assertions": [a.to_dict() for a in self.items],
        }

    def summary(self) -> str:
        lines = [f"{'PASS' if self.ok else 'FAIL'} {self.title}"]
        for a in self.items:
            if a.observational:
                mark = "obs:" + ("yes" if a.passed else "no ")
            else:
                mark = "ok    " if a.passed else "FAIL  "
            lines.append(f"  {mark} {a.name}" + (f" ({a.detail})" if a.detail else ""))
        return "\n".join(lines)
