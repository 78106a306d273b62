"""Ordered check reports with witnesses."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

PASS = "pass"
FAIL = "fail"
INFO = "informative"


@dataclass
class Check:
    name: str
    status: str
    witness: str | None = None
    value: str | None = None


def render(obj):
    """Deterministic string form of witnesses and values."""
    if obj is None:
        return None
    if isinstance(obj, str):
        return obj
    return str(obj)


class Report:
    """An ordered list of named checks. ``ok`` is true iff nothing failed."""

    def __init__(self, title=""):
        self.title = title
        self.checks = []

    def add(self, name, ok, witness=None, value=None):
        self.checks.append(Check(name, PASS if ok else FAIL, render(witness), render(value)))
        return ok

    def info(self, name, witness=None, value=None):
        self.checks.append(Check(name, INFO, render(witness), render(value)))

    def expect_none(self, name, witness, value=None):
        """Record a check whose witness search returned None on success."""
        return self.add(name, witness is None, witness, value)

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.value))
        return self

    @property
    def ok(self):
        return all(c.status != FAIL for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    def to_dict(self):
        return {"title": self.title, "ok": self.ok, "checks": [asdict(c) for c in self.checks]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        r = cls(data.get("title", ""))
        r.checks = [Check(**c) for c in data["checks"]]
        return r

    def lines(self):
        out = []
        for c in self.checks:
            line = f"[{c.status}] {c.name}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            if c.value is not None:
                line += f"  value={c.value}"
            out.append(line)
        return out

    def __str__(self):
        head = [self.title] if self.title else []
        return "\n".join(head + self.lines())
