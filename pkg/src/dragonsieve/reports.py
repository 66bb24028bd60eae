"""Pass/fail reporting shared by the verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    index: int
    expected: object
    actual: object


@dataclass
class CheckReport:
    """Outcome of one verification sweep.  Empty failures means pass."""

    name: str
    cases: int
    failures: list[Failure] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        # Timing is isolated in the final column so everything before it is
        # deterministic.
        if self.passed:
            head = f"ok\t{self.name}\tcases={self.cases}\t-"
        else:
            f = self.failures[0]
            head = (
                f"FAIL\t{self.name}\tcases={self.cases}\t"
                f"first: index={f.index} expected={f.expected} actual={f.actual}"
            )
        return f"{head}\t{self.wall_time:.3f}s"
