"""Structured outcome of a single verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass
class CheckReport:
    """One verification: what was compared, in which ring, and the verdict.

    lhs/rhs hold both sides of the last comparison (or the first failing
    one); sweep-style checks record the covered range in `note`.
    Informational checks (conjecture scans, misprint fits) never affect
    exit codes.
    """

    family: str
    inputs: dict = field(default_factory=dict)
    modulus: int | None = None
    lhs: int | Fraction | str | None = None
    rhs: int | Fraction | str | None = None
    status: str = PASS
    note: str = ""
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.status == PASS
