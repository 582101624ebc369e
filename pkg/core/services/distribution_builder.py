from fractions import Fraction
from typing import Optional, Union

from core.models.distribution import Distribution
from core.models.errors import ScopeError, SuiteCorruptionError
from core.models.seq_spec import SeqSpec
from core.models.verification_report import ComparisonLog, VerificationReport
from core.services.binom_core import BinomCore

Weight = Union[int, Fraction]

MODE_MEAN_TOLERANCE = 2
# regression guard for the asymptotic mean, applied from m = 200 on
ASYMPTOTIC_MEAN_GUARD = (200, Fraction(1, 1000))


class DistributionBuilder:
    def __init__(self, binom_core: Optional[BinomCore] = None) -> None:
        self.binom_core = binom_core or BinomCore()

    def normalizer(self, m: int, a: Weight) -> Fraction:
        spec = SeqSpec(m, Fraction(a))
        direct = sum(self.binom_core.f_sequence(spec).values, Fraction(0))
        closed = self.normalizer_closed_form(m, spec.a)

        if direct != closed:
            raise SuiteCorruptionError(
                f"normalizer routes disagree at m={m}, a={spec.a}: {direct} != {closed}"
            )
        return closed

    def normalizer_closed_form(self, m: int, a: Weight) -> Fraction:
        a = SeqSpec(m, Fraction(a)).a
        return (a + 1) / a * ((2 * a + 1) / (a + 1)) ** m - 1 / a

    def pmf(self, m: int, a: Weight) -> Distribution:
        spec = SeqSpec(m, Fraction(a))
        total = self.normalizer(m, spec.a)
        values = self.binom_core.f_sequence(spec).values
        return Distribution(spec=spec, normalizer=total, pmf=tuple(v / total for v in values))

    def geometric_moment_sum(self, i: int, m: int, x: Weight) -> Fraction:
        x = Fraction(x)
        if not 0 <= i <= m:
            raise ScopeError(f"needs 0 <= i <= m, got i={i}, m={m}")
        if x == 1:
            raise ScopeError("x = 1 is a pole of the closed form")

        closed = (
            i * x**i - (i - 1) * x ** (i + 1) - (m + 1) * x ** (m + 1) + m * x ** (m + 2)
        ) / (1 - x) ** 2
        direct = sum((r * x**r for r in range(i, m + 1)), Fraction(0))

        if closed != direct:
            raise SuiteCorruptionError(f"geometric moment sum disagrees at i={i}, m={m}, x={x}")
        return closed

    def binomial_moment_sum(self, m: int, x: Weight) -> Fraction:
        """sum_j j C(m,j) x^j = m (x+1)^(m-1) x."""
        x = Fraction(x)
        if m < 0:
            raise ScopeError(f"m must be nonnegative, got {m}")

        closed = m * (x + 1) ** (m - 1) * x if m else Fraction(0)
        direct = sum(
            (j * self.binom_core.binomial(m, j) * x**j for j in range(m + 1)), Fraction(0)
        )
        if closed != direct:
            raise SuiteCorruptionError(f"binomial moment sum disagrees at m={m}, x={x}")
        return closed

    def first_moment(self, m: int, a: Weight) -> Fraction:
        spec = SeqSpec(m, Fraction(a))
        a = spec.a
        ratio = (2 * a + 1) / (a + 1)
        closed = ((a + 1) / (2 * a + 1) * m + (a + 1) / a**2) * ratio**m - (
            m / a + (a + 1) / a**2
        )
        direct = sum(
            (r * value for r, value in enumerate(self.binom_core.f_sequence(spec).values)),
            Fraction(0),
        )

        if closed != direct:
            raise SuiteCorruptionError(f"first moment routes disagree at m={m}, a={a}")
        return closed

    def mean_closed_form(self, m: int, a: Weight) -> Fraction:
        return self.first_moment(m, a) / self.normalizer_closed_form(m, a)

    def mean_direct(self, m: int, a: Weight) -> Fraction:
        distribution = self.pmf(m, a)
        mean = sum((r * p for r, p in enumerate(distribution.pmf)), Fraction(0))

        closed = self.mean_closed_form(m, a)
        if mean != closed:
            raise SuiteCorruptionError(
                f"mean routes disagree at m={m}, a={distribution.spec.a}: {mean} != {closed}"
            )
        return mean

    def asymptotic_mean(self, m: int, a: Weight) -> Fraction:
        a = Fraction(a)
        if a <= 0:
            raise ScopeError(f"a must be positive, got {a}")
        return a * m / (2 * a + 1) + 1 / a

    def mode_vs_mean_gap(self, m: int, a: Weight) -> Fraction:
        return self.mean_closed_form(m, a) - self.binom_core.predicted_peak(m, a)

    def check_normalizer(self, m: int, a: Weight) -> VerificationReport:
        distribution = self.pmf(m, a)
        log = ComparisonLog("normalizer", {"m": m, "a": distribution.spec.a})
        log.compare(distribution.normalizer, "==", self.normalizer_closed_form(m, a))
        log.compare(sum(distribution.pmf, Fraction(0)), "==", 1, note="pmf total")
        return log.report()

    def check_mean(self, m: int, a: Weight) -> VerificationReport:
        spec = SeqSpec(m, Fraction(a))
        mean = self.mean_direct(m, spec.a)

        log = ComparisonLog("mean", {"m": m, "a": spec.a})
        log.compare(mean, "==", self.mean_closed_form(m, spec.a), note="dual route")

        guard_m, guard_gap = ASYMPTOTIC_MEAN_GUARD
        if m >= guard_m:
            log.compare(
                abs(mean - self.asymptotic_mean(m, spec.a)), "<", guard_gap, note="asymptotic mean"
            )
        if spec.integer_weight and m >= 2:
            log.compare(
                abs(self.mode_vs_mean_gap(m, spec.a)),
                "<=",
                MODE_MEAN_TOLERANCE,
                note="mode vs mean",
            )
        return log.report()
