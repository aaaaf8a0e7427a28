"""Check outcomes as data."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .partitions import Partition, format_partition
from .qpoly import LaurentPoly


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification case.

    ``expected`` is the outcome the suite asserts; a case is satisfied when
    ``passed == expected`` (so expected-failure cases count as satisfied only
    when they do fail, with a witness).
    """

    suite_id: str
    parameters: dict[str, Any]
    passed: bool
    witness: Any = None
    expected: bool = True

    @property
    def ok(self) -> bool:
        return self.passed == self.expected

    def with_expected(self, expected: bool) -> CheckReport:
        return CheckReport(self.suite_id, self.parameters, self.passed, self.witness, expected)

    def to_record(self) -> dict[str, Any]:
        return {
            "suite_id": self.suite_id,
            "parameters": _plain(self.parameters),
            "passed": self.passed,
            "expected": self.expected,
            "witness": _plain(self.witness),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, separators=(",", ":"))


def _plain(obj: Any) -> Any:
    # keep the on-disk form free of library types
    from .schur import SchurSum

    if isinstance(obj, Partition):
        return format_partition(obj)
    if isinstance(obj, LaurentPoly):
        return obj.render()
    if isinstance(obj, SchurSum):
        return obj.render()
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "numerator") and hasattr(obj, "denominator") and not isinstance(obj, int):
        return f"{obj.numerator}/{obj.denominator}" if obj.denominator != 1 else obj.numerator
    return obj


def report(suite_id: str, params: dict, failures: list, payload: Any = None) -> CheckReport:
    """Pass iff ``failures`` is empty; otherwise the first failures become the witness."""
    if failures:
        return CheckReport(suite_id, params, False, failures[:5] if len(failures) > 1 else failures[0])
    return CheckReport(suite_id, params, True, payload)
