from dataclasses import dataclass

from mpmath import mpf


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    scaled: mpf
    limit: mpf
    rel_err: mpf
