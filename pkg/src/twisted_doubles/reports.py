"""Pass/fail records shared by all verifiers."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

PASS, FAIL, NA = "pass", "fail", "not-applicable"


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool | None
    witness: Any = None

    @property
    def status(self) -> str:
        return NA if self.ok is None else (PASS if self.ok else FAIL)

    def record(self) -> dict:
        return {"check": self.name, "status": self.status, "witness": _jsonable(self.witness)}


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool | None, witness: Any = None) -> Check:
        c = Check(name, ok, witness)
        self.checks.append(c)
        return c

    def extend(self, checks: Iterable[Check]):
        self.checks.extend(checks)

    @property
    def ok(self) -> bool:
        return all(c.ok is not False for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.ok is False]

    def records(self) -> list[dict]:
        return [c.record() for c in self.checks]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records())

    def __str__(self):
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            w = "" if c.witness is None or c.ok else f"  witness={_jsonable(c.witness)}"
            lines.append(f"  {c.name:<28} {c.status.upper()}{w}")
        return "\n".join(lines)


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    return str(x)
