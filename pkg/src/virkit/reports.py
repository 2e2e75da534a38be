"""Result types shared by the window checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """One failed instance: the inputs that triggered it and the residual.

    Inputs and residual keep their live objects (basis elements, elements,
    weight vectors, rationals); rendering happens only at serialization.
    """

    inputs: tuple
    residual: object

    def describe(self) -> dict:
        return {
            "inputs": [str(item) for item in self.inputs],
            "residual": str(self.residual),
        }


@dataclass
class CheckReport:
    """Outcome of an exhaustive window check; passed iff no violations."""

    passed: bool
    window: int
    violations: list[Violation] = field(default_factory=list)

    @classmethod
    def from_violations(cls, window: int, violations: list[Violation]) -> "CheckReport":
        return cls(passed=not violations, window=window, violations=violations)

    def describe(self, max_violations: int = 50) -> dict:
        return {
            "passed": self.passed,
            "window": self.window,
            "violation_count": len(self.violations),
            "violations": [v.describe() for v in self.violations[:max_violations]],
        }
