from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PeakReport:
    argmax_min: int
    tie_indices: tuple[int, ...]
    peak_value: Fraction

    @property
    def unique(self) -> bool:
        return len(self.tie_indices) == 1
