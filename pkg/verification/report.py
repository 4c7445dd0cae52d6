"""
Verification Reports

Result objects for the invariant battery. A Report serializes to the stable
schema {command, params, checks: [{name, status, detail}]}.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List


class CheckStatus(Enum):
    """Outcome of one check."""
    PASS = "pass"
    FAIL = "fail"


@dataclass
class CheckResult:
    """One named check with a human-readable detail line."""

    name: str
    status: CheckStatus
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @classmethod
    def from_failures(cls, name: str, failures: List[str], summary: str) -> "CheckResult":
        """PASS with the summary when failures is empty, FAIL listing the first few otherwise."""
        if not failures:
            return cls(name, CheckStatus.PASS, summary)
        shown = "; ".join(failures[:5])
        more = f" (+{len(failures) - 5} more)" if len(failures) > 5 else ""
        return cls(name, CheckStatus.FAIL, f"{shown}{more}")

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "status": self.status.value, "detail": self.detail}


@dataclass
class Report:
    """All check results of one command run."""

    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "command": self.command,
            "params": dict(self.params),
            "checks": [c.to_dict() for c in self.checks],
        }
