"""Pass/fail reports for the verification suites.

Checkers never raise on a mathematical mismatch; they collect one failure
entry per violated identity (with enough context to reproduce it) and the
caller decides what to do.  Genuine usage errors still raise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckReport"]


@dataclass
class CheckReport:
    """Outcome of one verification suite."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, amount: int = 1) -> None:
        self.checked += amount

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def note(self, message: str) -> None:
        self.notes.append(message)

    def merge(self, other: "CheckReport") -> None:
        self.checked += other.checked
        self.failures.extend(f"{other.name}: {msg}" for msg in other.failures)
        self.notes.extend(f"{other.name}: {msg}" for msg in other.notes)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"[{status}] {self.name}: {self.checked} checks"
        if self.failures:
            text += f", {len(self.failures)} failures"
        return text

    def render(self) -> str:
        lines = [self.summary()]
        lines.extend(f"  failure: {msg}" for msg in self.failures)
        lines.extend(f"  note: {msg}" for msg in self.notes)
        return "\n".join(lines)
