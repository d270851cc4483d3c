"""Check records and machine-readable reports shared by every suite."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any

TOOL_VERSION = "0.1.0"


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    FALSIFIED = "falsified"
    BUDGET_EXCEEDED = "budget_exceeded"

    def __str__(self) -> str:
        return self.value


@dataclass
class Check:
    """One verified claim: what was checked, how it came out, and evidence."""

    name: str
    claim: str
    status: Status
    witness: Any = None
    ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self, timing: bool = True) -> dict:
        out = {"name": self.name, "claim": self.claim, "status": self.status.value, "witness": self.witness}
        if timing:
            out["ms"] = round(self.ms, 3)
        return out


@dataclass
class Report:
    params: dict
    seed: int | None = None
    checks: list[Check] = field(default_factory=list)
    version: str = TOOL_VERSION

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    def exit_code(self) -> int:
        """0 when everything passed, 1 on any failure or falsification, else 2."""
        statuses = {c.status for c in self.checks}
        if statuses & {Status.FAIL, Status.FALSIFIED}:
            return 1
        if Status.BUDGET_EXCEEDED in statuses:
            return 2
        return 0

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "tool_version": self.version,
            "params": self.params,
            "seed": self.seed,
            "checks": [c.to_dict(timing) for c in self.checks],
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True) + "\n"
