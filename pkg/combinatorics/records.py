"""
Verification Records

Plain result objects returned by the brute-force oracles. They never raise
on a mismatch; the caller decides what a failed record means.
"""

from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass
class VerificationRecord:
    """Outcome of one oracle comparison."""

    name: str
    n: int
    passed: bool
    expected: Any = None
    observed: Any = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "passed": self.passed,
            "expected": _jsonable(self.expected),
            "observed": _jsonable(self.observed),
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def _jsonable(value: Any) -> Any:
    # big integers become strings once they leave exact_core
    if isinstance(value, int) and not isinstance(value, bool) and abs(value) >= 2**53:
        return str(value)
    return value
