from dataclasses import dataclass
from fractions import Fraction

from core.models.peak_report import PeakReport


@dataclass(frozen=True)
class PeakComparison:
    m: int
    a: Fraction
    predicted: int
    observed: PeakReport
    integer_weight: bool
    exceptional: bool

    @property
    def offset(self) -> int:
        return self.predicted - self.observed.argmax_min

    @property
    def matches(self) -> bool:
        return self.observed.tie_indices == (self.predicted,)
