from collections.abc import Sequence
from fractions import Fraction
from typing import Optional, Union

import mpmath
from mpmath.libmp import from_rational, round_nearest

from core.models.convergence_row import ConvergenceRow
from core.models.errors import ScopeError
from core.models.verification_report import ComparisonLog, VerificationReport
from core.services.binom_core import BinomCore

Weight = Union[int, Fraction]

GUARD_BITS = 32


class Asymptotics:
    """Peak bounds, the scaled peak value and its limit.

    Exact rationals are kept until the last step; each floating evaluation runs in
    its own mpmath context at the requested precision plus guard bits and is
    rounded once at the end.
    """

    def __init__(self, binom_core: Optional[BinomCore] = None) -> None:
        self.binom_core = binom_core or BinomCore()

    def peak_bounds(self, m: int, a: Weight) -> tuple[Fraction, Fraction]:
        weight = self.binom_core.integer_weight(a)
        if m <= 6 * (weight + 1):
            raise ScopeError(f"peak bounds need m > 6(a+1) = {6 * (weight + 1)}, got m={m}")

        r = self.binom_core.predicted_peak(m, weight)
        upper = Fraction(weight, weight + 1) ** (r - 1) * self.binom_core.binomial(m, r)
        lower = (1 - Fraction(self.offset(m, weight), (1 + weight) * (1 + r))) * upper
        return lower, upper

    def sandwich_check(self, m: int, a: Weight) -> VerificationReport:
        lower, upper = self.peak_bounds(m, a)
        weight = self.binom_core.integer_weight(a)
        r = self.binom_core.predicted_peak(m, weight)
        value = self.binom_core.f_value(m, weight, r)

        log = ComparisonLog("prop51", {"m": m, "a": weight})
        log.compare(lower, "<", value, note="lower bound", r=r)
        log.compare(value, "<", upper, note="upper bound", r=r)
        return log.report()

    def offset(self, m: int, a: Weight) -> int:
        """(1+2a) r_a - am + a + 1."""
        weight = self.binom_core.integer_weight(a)
        r = self.binom_core.predicted_peak(m, weight)
        return (1 + 2 * weight) * r - weight * m + weight + 1

    def offset_range_check(self, m: int, a: Weight) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        delta = self.offset(m, weight)

        log = ComparisonLog("offset", {"m": m, "a": weight})
        log.compare(delta, ">", 2)
        log.compare(delta, "<=", 2 * weight + 3)
        return log.report()

    def scaled_peak_factor(self, m: int, a: Weight) -> Fraction:
        """f(m, a, r_a) * ((1+a)/(1+2a))^m, exact."""
        weight = self.binom_core.integer_weight(a)
        r = self.binom_core.predicted_peak(m, weight)
        return self.binom_core.f_value(m, weight, r) * Fraction(1 + weight, 1 + 2 * weight) ** m

    def scaled_peak_value(self, m: int, a: Weight, precision: int = 128) -> mpmath.mpf:
        ctx = self._context(precision)
        value = self._from_fraction(ctx, self.scaled_peak_factor(m, a)) * ctx.sqrt(m)
        return self._round(ctx, value, precision)

    def limit_constant(self, a: Weight, precision: int = 128) -> mpmath.mpf:
        weight = self.binom_core.integer_weight(a)
        ctx = self._context(precision)
        value = (
            ctx.sqrt(1 + weight)
            * (1 + 2 * weight)
            / (ctx.mpf(weight) ** ctx.mpf(1.5) * ctx.sqrt(2 * ctx.pi))
        )
        return self._round(ctx, value, precision)

    def large_a_limit(self, precision: int = 128) -> mpmath.mpf:
        ctx = self._context(precision)
        return self._round(ctx, ctx.sqrt(2 / ctx.pi), precision)

    def convergence_table(
        self, a: Weight, m_schedule: Sequence[int], precision: int = 128
    ) -> list[ConvergenceRow]:
        schedule = list(m_schedule)
        if not schedule:
            raise ScopeError("the m schedule must not be empty")
        if schedule != sorted(set(schedule)):
            raise ScopeError("the m schedule must be strictly ascending")
        if schedule[0] < 2:
            raise ScopeError(f"the m schedule must start at m >= 2, got {schedule[0]}")

        limit = self.limit_constant(a, precision)
        ctx = self._context(precision)

        rows = []
        for m in schedule:
            scaled = self.scaled_peak_value(m, a, precision)
            ratio = ctx.convert(scaled) / ctx.convert(limit)
            rel_err = self._round(ctx, abs(ratio - 1), precision)
            rows.append(ConvergenceRow(m=m, scaled=scaled, limit=limit, rel_err=rel_err))
        return rows

    def _context(self, precision: int) -> mpmath.MPContext:
        ctx = mpmath.MPContext()
        ctx.prec = precision + GUARD_BITS
        return ctx

    def _from_fraction(self, ctx: mpmath.MPContext, value: Fraction) -> mpmath.mpf:
        return ctx.make_mpf(
            from_rational(value.numerator, value.denominator, ctx.prec, round_nearest)
        )

    def _round(self, ctx: mpmath.MPContext, value: mpmath.mpf, precision: int) -> mpmath.mpf:
        ctx.prec = precision
        rounded = +ctx.convert(value)
        ctx.prec = precision + GUARD_BITS
        return rounded
