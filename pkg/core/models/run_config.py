from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.models.check_id import CheckId
from core.models.command import Command, OutputFormat

IntAxis = Optional[tuple[int, ...]]


class RunConfig(BaseModel):
    """Validated CLI run: command, swept axes, output and precision settings.

    Axes left as None fall back to the per-check default ranges.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    command: Command
    check: Optional[CheckId] = None

    m: IntAxis = None
    a: Optional[tuple[Fraction, ...]] = None
    l: IntAxis = None
    n: IntAxis = None
    k: IntAxis = None
    r: IntAxis = None
    schedule: IntAxis = None

    output_format: OutputFormat = OutputFormat.JSON
    output: Optional[Path] = None
    precision: int = Field(default=128, ge=16)
    digits: int = Field(default=30, ge=1, le=10_000)
    workers: int = Field(default=1, ge=1)
    max_m: int = Field(default=50_000, ge=2)

    @field_validator("m", "l", "n", "k", "r", "schedule", "a")
    @classmethod
    def _nonempty(cls, value: Optional[tuple[Any, ...]]) -> Optional[tuple[Any, ...]]:
        if value is not None and not value:
            raise ValueError("parameter ranges must not be empty")
        return value

    @field_validator("a")
    @classmethod
    def _positive_weights(
        cls, value: Optional[tuple[Fraction, ...]]
    ) -> Optional[tuple[Fraction, ...]]:
        if value is None:
            return value
        for weight in value:
            if not isinstance(weight, Fraction):
                raise ValueError(f"a values must be exact rationals, got {weight!r}")
            if weight <= 0:
                raise ValueError(f"a must be strictly positive, got {weight}")
        return value

    @model_validator(mode="after")
    def _guards(self) -> "RunConfig":
        for name in ("m", "schedule"):
            values = getattr(self, name)
            if values and max(values) > self.max_m:
                raise ValueError(
                    f"{name}={max(values)} exceeds the exact-path guard max_m={self.max_m}"
                )
            if values and min(values) < 0:
                raise ValueError(f"{name} must be nonnegative")

        if self.check is not None and self.command is not Command.VERIFY:
            raise ValueError("a check id is only accepted by the verify command")

        if self.schedule is not None and list(self.schedule) != sorted(set(self.schedule)):
            raise ValueError("schedule must be strictly ascending")

        return self

    def echo(self) -> dict[str, Any]:
        data: dict[str, Any] = {"command": self.command.value}
        if self.check is not None:
            data["check"] = self.check.value
        for name in ("m", "a", "l", "n", "k", "r", "schedule"):
            values = getattr(self, name)
            if values is not None:
                data[name] = [str(v) for v in values] if name == "a" else list(values)
        data["format"] = self.output_format.value
        data["precision"] = self.precision
        data["digits"] = self.digits
        return data
