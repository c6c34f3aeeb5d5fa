from dataclasses import dataclass, field
from typing import Any, Dict, Optional

PASS = 'pass'
FAIL = 'fail'
#: global conditions that pointwise data can't decide
NOT_VERIFIED = 'not verified — global'


@dataclass
class CheckResult:
    """
    Outcome of one numerical check
    """

    name: str
    passed: Optional[bool]
    worst_residual: Optional[float] = None
    tolerance: Optional[float] = None
    samples: int = 0
    detail: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.passed is None:
            return NOT_VERIFIED
        return PASS if self.passed else FAIL

    @classmethod
    def from_residual(cls, name, residual, tolerance, samples, **detail) -> 'CheckResult':
        residual = float(residual)
        return cls(name, residual <= tolerance, residual, float(tolerance), samples, detail)

    @classmethod
    def from_flag(cls, name, flag, samples=1, **detail) -> 'CheckResult':
        return cls(name, bool(flag), None, None, samples, detail)

    @classmethod
    def not_verified(cls, name, reason) -> 'CheckResult':
        return cls(name, None, detail={'reason': reason})
