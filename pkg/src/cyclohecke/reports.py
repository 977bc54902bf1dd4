"""Structured pass/fail records for the named verification checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """One named check with its parameters, outcome and witness data.

    The canonical JSON rendering excludes the wall-clock duration so that
    reruns with the same parameters and seed are byte-identical; durations
    stay on the object for optional display.
    """

    check: str
    params: dict
    status: str  # "pass" | "fail" | "skipped"
    witnesses: list = field(default_factory=list)
    seed: int | None = None
    duration: float = 0.0

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skipped"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witnesses:
            raise ValueError("failure reports must carry a witness")

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "witnesses": self.witnesses,
            "seed": self.seed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def summarize(reports):
    """(passed, failed, skipped) counts for a list of reports."""
    passed = sum(1 for r in reports if r.status == "pass")
    failed = sum(1 for r in reports if r.status == "fail")
    skipped = sum(1 for r in reports if r.status == "skipped")
    return passed, failed, skipped
