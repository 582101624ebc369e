from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class ConcavityReport:
    holds: bool
    first_violation: Optional[int] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.holds != (self.first_violation is None):
            raise ValueError("holds must be True exactly when no violation is recorded")

    @classmethod
    def ok(cls) -> "ConcavityReport":
        return cls(holds=True)

    @classmethod
    def violated(cls, index: int, lhs: Fraction, rhs: Fraction) -> "ConcavityReport":
        return cls(holds=False, first_violation=index, lhs=lhs, rhs=rhs)
