"""Pass/fail verdicts shared by the diagram checks and the obstruction pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str = ""
    witness: str | None = None
    sampled: bool = False
    details: dict = field(default_factory=dict, compare=False)

    @classmethod
    def ok(cls, reason: str = "", **kw) -> Verdict:
        return cls(PASS, reason, **kw)

    @classmethod
    def fail(cls, reason: str, **kw) -> Verdict:
        return cls(FAIL, reason, **kw)

    @classmethod
    def skip(cls, reason: str, **kw) -> Verdict:
        return cls(NOT_APPLICABLE, reason, **kw)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def __bool__(self):
        return self.status != FAIL

    def __str__(self):
        text = self.status
        if self.reason:
            text += f": {self.reason}"
        if self.sampled:
            text += " [sampled]"
        return text

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness
        if self.sampled:
            out["sampled"] = True
        if self.details:
            out["details"] = self.details
        return out
