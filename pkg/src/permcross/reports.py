"""Structured pass/fail reports for identity verification runs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

__all__ = ["CheckReport"]


@dataclass
class CheckReport:
    """Outcome of one verified identity.

    A failing report always carries a counterexample (the first one found);
    a passing report means the whole declared n_range was covered. A check
    whose hypothesis does not apply is "skipped" with the reason recorded.
    """

    name: str
    status: str  # "pass" | "fail" | "skipped"
    n_range: tuple[int, int] | None = None
    counterexample: dict[str, Any] | None = None
    reason: str | None = None
    elapsed_ms: float | None = None

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skipped"):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")
        if self.status == "skipped" and not self.reason:
            raise ValueError("a skipped report must name the failed guard")

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "name": self.name,
            "status": self.status,
            "n_range": list(self.n_range) if self.n_range is not None else None,
            "counterexample": self.counterexample,
        }
        if self.reason is not None:
            data["reason"] = self.reason
        data["elapsed_ms"] = self.elapsed_ms
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
