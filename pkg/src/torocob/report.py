"""Validity reports: invalid data is returned, not raised."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    code: str
    subject: tuple[str, ...]
    detail: str = ""


@dataclass(frozen=True)
class ValidityReport:
    check: str
    violations: tuple[Violation, ...] = ()

    _computed = ("valid",)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def cites(self, ident: str) -> bool:
        return any(ident in v.subject for v in self.violations)

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


def merge(check: str, *reports: ValidityReport) -> ValidityReport:
    return ValidityReport(check, tuple(v for r in reports for v in r.violations))
