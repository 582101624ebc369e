from pathlib import Path
from typing import Any, Optional

from core.helpers.range_parser import RangeParser
from core.models.profile import RunProfile
from core.models.run_config import RunConfig

INT_AXES = ("m", "l", "n", "k", "r", "schedule")
SCALAR_KEYS = ("precision", "digits", "workers")
KNOWN_KEYS = {"command", "check", "a", "format", "output", "profile", *INT_AXES, *SCALAR_KEYS}


class RunConfigLoader:
    def __init__(self, range_parser: Optional[RangeParser] = None) -> None:
        self.range_parser = range_parser or RangeParser()

    def load(self, args: dict[str, str], profile: RunProfile) -> RunConfig:
        unknown = sorted(set(args) - KNOWN_KEYS)
        if unknown:
            raise ValueError(f"Unknown argument(s): {', '.join(unknown)}")

        if "command" not in args:
            raise ValueError("Missing required argument: command")

        values: dict[str, Any] = {
            "command": args["command"],
            "output_format": args.get("format", profile.output_format),
            "precision": profile.precision_bits,
            "digits": profile.digits,
            "workers": profile.workers,
            "max_m": profile.max_m,
        }

        if "check" in args:
            values["check"] = args["check"]

        for axis in INT_AXES:
            if axis in args:
                values[axis] = self.range_parser.parse_ints(args[axis])

        if "a" in args:
            values["a"] = self.range_parser.parse_rationals(args["a"])

        for key in SCALAR_KEYS:
            if key in args:
                values[key] = self._to_int(key, args[key])

        if "output" in args:
            values["output"] = Path(args["output"])

        return RunConfig(**values)

    def _to_int(self, key: str, raw: str) -> int:
        try:
            return int(raw)
        except ValueError as exc:
            raise ValueError(f"{key} must be an integer, got {raw!r}") from exc
