"""Verification report shared by all checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    identity: str
    params: dict[str, Any]
    status: str = "pass"
    witness: Any = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def fail(self, witness: Any) -> None:
        # keep the first failure only
        if self.status != "fail":
            self.status = "fail"
            self.witness = witness

    def to_json(self) -> dict:
        out = {"identity": self.identity, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out
