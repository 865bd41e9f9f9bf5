"""Machine-readable outcome of a verification check."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass
class CheckReport:
    check_name: str
    preset: str
    parameters: dict = field(default_factory=dict)
    status: str = PASS
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, ERROR):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self):
        return self.status == PASS

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True, default=str)

    def line(self):
        mark = "PASS" if self.passed else self.status.upper()
        return f"[{mark}] {self.check_name} ({self.preset})"
