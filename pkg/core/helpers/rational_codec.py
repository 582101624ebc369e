from fractions import Fraction
from typing import Any

import mpmath
from mpmath.libmp import from_rational, round_nearest


class RationalCodec:
    def encode(self, value: Fraction) -> str:
        return str(value)

    def decode(self, raw: str) -> Fraction:
        return Fraction(raw)

    def to_mpf(self, value: Fraction, precision: int) -> mpmath.mpf:
        """Correctly rounded (nearest, ties to even) binary value at ``precision`` bits."""
        ctx = mpmath.MPContext()
        ctx.prec = precision
        return ctx.make_mpf(
            from_rational(value.numerator, value.denominator, precision, round_nearest)
        )

    def to_decimal(self, value: Any, digits: int) -> str:
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return str(value.numerator)
            # ~3.33 bits per digit plus headroom
            value = self.to_mpf(value, int(digits * 3.33) + 16)
        return mpmath.nstr(value, digits)
