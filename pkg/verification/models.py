from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True, order=True)
class Mismatch:
    """One failed check: the instance, what the reference said, what was computed."""

    parameters: tuple[tuple[str, Any], ...]
    check: str
    expected: Any = field(compare=False)
    got: Any = field(compare=False)

    def parameter_dict(self) -> dict:
        return dict(self.parameters)


@dataclass(frozen=True)
class SweepReport:
    sweep_name: str
    instances_checked: int
    mismatches: tuple[Mismatch, ...] = ()
    # Wall-clock time varies run to run, so it takes no part in equality.
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.mismatches
