"""Structured results returned by the identity verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exactcore import IntPoly


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity at one index.

    ``residual`` is left side minus right side: an ``IntPoly`` for polynomial
    identities, an ``int`` for scalar ones, a ``float`` for numeric checks.
    """

    name: str
    index: int
    passed: bool
    residual: Any = 0
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        res = self.residual
        if isinstance(res, IntPoly):
            res = {"coeffs": list(res.coeffs), "text": res.render()}
        return {
            "name": self.name,
            "index": self.index,
            "passed": self.passed,
            "residual": res,
            **({"details": self.details} if self.details else {}),
        }


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
