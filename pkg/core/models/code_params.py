from dataclasses import dataclass

from core.models.errors import ScopeError


@dataclass(frozen=True)
class CodeParams:
    r: int
    m: int
    n: int
    k: int
    d: int

    def __post_init__(self) -> None:
        if not 0 <= self.r <= self.m:
            raise ScopeError(f"RM(r, m) needs 0 <= r <= m, got r={self.r}, m={self.m}")
        if self.n != 2**self.m or self.d * 2**self.r != self.n:
            raise ValueError(f"Inconsistent RM parameters: {self}")

    def as_triple(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)
