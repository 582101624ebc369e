from fractions import Fraction


class RangeParser:
    def parse_ints(self, raw: str) -> tuple[int, ...]:
        values: list[int] = []
        for part in self._parts(raw):
            if ":" in part:
                lo, hi = (self._to_int(bound) for bound in part.split(":", 1))
                if hi < lo:
                    raise ValueError(f"Range must satisfy lo <= hi: {part}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(self._to_int(part))
        return tuple(values)

    def parse_rationals(self, raw: str) -> tuple[Fraction, ...]:
        values: list[Fraction] = []
        for part in self._parts(raw):
            if ":" in part:
                values.extend(Fraction(v) for v in self.parse_ints(part))
            else:
                values.append(self._to_fraction(part))
        return tuple(values)

    def _parts(self, raw: str) -> list[str]:
        parts = [part.strip() for part in raw.split(",")]
        if not raw.strip() or any(not part for part in parts):
            raise ValueError(f"Malformed range: {raw!r}")
        return parts

    def _to_int(self, raw: str) -> int:
        try:
            return int(raw.strip())
        except ValueError as exc:
            raise ValueError(f"Expected an integer, got {raw!r}") from exc

    def _to_fraction(self, raw: str) -> Fraction:
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Expected an exact rational like 5/2 or 2.5, got {raw!r}") from exc
