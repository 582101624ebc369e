from dataclasses import dataclass
from fractions import Fraction

from core.models.seq_spec import SeqSpec


@dataclass(frozen=True)
class Distribution:
    spec: SeqSpec
    normalizer: Fraction
    pmf: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if sum(self.pmf, Fraction(0)) != 1:
            raise ValueError("pmf must sum to exactly 1")
        if any(p <= 0 for p in self.pmf):
            raise ValueError("pmf entries must be strictly positive")
