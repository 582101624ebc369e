from dataclasses import dataclass
from enum import Enum
from typing import Optional


class ResidueTag(str, Enum):
    M3 = "M3"
    GEN = "GEN"


@dataclass(frozen=True)
class ResidueInfo:
    """Position of m inside the block structure modulo 2a+1.

    M3:  m = (2a+1)k + 3,          peak index ak + 2
    GEN: m = (2a+1)k + 2n + eps,   peak index ak + n, n in [2, a+1], eps in {0, 1}
    """

    a: int
    m: int
    k: int
    case_tag: ResidueTag
    n: Optional[int] = None
    epsilon: Optional[int] = None

    def reconstruct(self) -> int:
        if self.case_tag is ResidueTag.M3:
            return (2 * self.a + 1) * self.k + 3
        return (2 * self.a + 1) * self.k + 2 * self.n + self.epsilon

    @property
    def peak(self) -> int:
        if self.case_tag is ResidueTag.M3:
            return self.a * self.k + 2
        return self.a * self.k + self.n
