"""Verification report type shared by the checking harnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one bounded verification sweep.

    passed is forced to agree with the counterexample list: a report
    fails exactly when at least one counterexample was recorded.
    """

    claim: str
    bounds: dict
    counterexamples: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    note: str | None = None
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "claim": self.claim,
            "bounds": self.bounds,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
        }
        if self.stats:
            out["stats"] = self.stats
        if self.note:
            out["note"] = self.note
        if include_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=2, sort_keys=False)

    def summary_line(self) -> str:
        verdict = "pass" if self.passed else "FAIL (%d counterexamples)" % len(self.counterexamples)
        suffix = " (%s)" % self.note if self.note else ""
        return "%s: %s%s" % (self.claim, verdict, suffix)
