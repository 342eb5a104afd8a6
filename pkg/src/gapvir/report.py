from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of an exhaustive window check.

    ``violations`` holds one record per failing tuple; an empty list means
    the property held on every case counted in ``checked``.
    """

    name: str
    checked: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, **record) -> None:
        self.violations.append(record)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "violations": self.violations,
            **self.details,
        }
