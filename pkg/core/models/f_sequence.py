from dataclasses import dataclass
from fractions import Fraction

from core.models.seq_spec import SeqSpec


@dataclass(frozen=True)
class FSequence:
    spec: SeqSpec
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.spec.m + 1:
            raise ValueError(
                f"FSequence for m={self.spec.m} needs {self.spec.m + 1} values, "
                f"got {len(self.values)}"
            )

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, r: int) -> Fraction:
        return self.values[r]
