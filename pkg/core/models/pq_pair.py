from dataclasses import dataclass

from core.models.lpoly import LPoly


@dataclass(frozen=True)
class PQPair:
    n: int
    P: LPoly
    Q: LPoly
