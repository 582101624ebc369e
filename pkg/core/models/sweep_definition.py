from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Optional

from core.models.verification_report import VerificationReport

CellFunction = Callable[..., VerificationReport]
Summarizer = Callable[[list[VerificationReport]], VerificationReport]


@dataclass(frozen=True)
class SweepDefinition:
    """A check id bound to its per-cell function and default parameter grid.

    Axes whose default is None are handed to the cell only when the caller
    overrides them; the cell then covers the admissible range itself.
    """

    name: str
    axes: tuple[str, ...]
    cell: CellFunction
    defaults: Mapping[str, Optional[tuple[Any, ...]]] = field(default_factory=dict)
    description: str = ""
    summarize: Optional[Summarizer] = None

    def expand(self, overrides: Optional[Mapping[str, Any]] = None) -> list[dict[str, Any]]:
        overrides = overrides or {}

        names: list[str] = []
        grids: list[tuple[Any, ...]] = []
        for axis in self.axes:
            values = overrides.get(axis)
            if values is None:
                values = self.defaults.get(axis)
            if values is None:
                continue
            names.append(axis)
            grids.append(tuple(values))

        return [dict(zip(names, combo)) for combo in product(*grids)]
