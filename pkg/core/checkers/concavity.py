from collections.abc import Sequence
from fractions import Fraction
from itertools import accumulate
from typing import Optional, Union

from core.models.concavity_report import ConcavityReport
from core.models.errors import PreconditionError, SuiteCorruptionError
from core.models.seq_spec import SeqSpec
from core.services.binom_core import BinomCore

Number = Union[int, Fraction]


class ConcavityChecker:
    """Exact log-concavity and unimodality checks on finite sequences.

    All comparisons are weak (>=), matching the definitions they implement.
    """

    def __init__(self, binom_core: Optional[BinomCore] = None) -> None:
        self.binom_core = binom_core or BinomCore()

    def is_log_concave(self, xs: Sequence[Number]) -> ConcavityReport:
        values = self._nonnegative(xs)

        for k in range(1, len(values) - 1):
            lhs = values[k] * values[k]
            rhs = values[k - 1] * values[k + 1]
            if lhs < rhs:
                return ConcavityReport.violated(k, lhs, rhs)

        return ConcavityReport.ok()

    def is_strongly_log_concave(self, xs: Sequence[Number]) -> ConcavityReport:
        values = self._nonnegative(xs)

        for k in range(1, len(values)):
            for l in range(k, len(values) - 1):
                lhs = values[k] * values[l]
                rhs = values[k - 1] * values[l + 1]
                if lhs < rhs:
                    return ConcavityReport.violated(k, lhs, rhs)

        return ConcavityReport.ok()

    def is_unimodal(self, xs: Sequence[Number]) -> ConcavityReport:
        values = [Fraction(x) for x in xs]
        descending = False

        for k in range(1, len(values)):
            if values[k] < values[k - 1]:
                descending = True
            elif values[k] > values[k - 1] and descending:
                return ConcavityReport.violated(k, values[k], values[k - 1])

        return ConcavityReport.ok()

    def hadamard_partial_sum_check(
        self,
        xs: Sequence[Number],
        ys: Sequence[Number],
    ) -> ConcavityReport:
        """Partial sums of the term-wise product of two log-concave sequences.

        Raises PreconditionError when a factor is not log-concave and
        SuiteCorruptionError when the partial sums are not.
        """
        if len(xs) != len(ys):
            raise PreconditionError(
                f"sequences must have equal length, got {len(xs)} and {len(ys)}"
            )

        for name, factor in (("xs", xs), ("ys", ys)):
            report = self.is_log_concave(factor)
            if not report.holds:
                raise PreconditionError(
                    f"{name} is not log-concave at k={report.first_violation}: "
                    f"{report.lhs} < {report.rhs}"
                )

        partial_sums = self.hadamard_partial_sums(xs, ys)
        report = self.is_log_concave(partial_sums)
        if not report.holds:
            raise SuiteCorruptionError(
                f"partial sums of a Hadamard product lost log-concavity at "
                f"k={report.first_violation}: {report.lhs} < {report.rhs}"
            )
        return report

    def hadamard_partial_sums(
        self, xs: Sequence[Number], ys: Sequence[Number]
    ) -> list[Fraction]:
        return list(accumulate(Fraction(x) * Fraction(y) for x, y in zip(xs, ys)))

    def sequence_oracle(self, m: int, a: Number) -> ConcavityReport:
        spec = SeqSpec(m, Fraction(a))
        xs = [self.binom_core.binomial(m, i) for i in range(m + 1)]
        ys = [spec.a**i for i in range(m + 1)]

        report = self.hadamard_partial_sum_check(xs, ys)

        partial_sums = self.hadamard_partial_sums(xs, ys)
        for r, value in enumerate(partial_sums):
            if value != self.binom_core.weighted_partial_sum(m, spec.a, r):
                raise SuiteCorruptionError(
                    f"Hadamard partial sum differs from the weighted sum at m={m}, r={r}"
                )
        return report

    def _nonnegative(self, xs: Sequence[Number]) -> list[Fraction]:
        values = [Fraction(x) for x in xs]
        for index, value in enumerate(values):
            if value < 0:
                raise ValueError(f"entries must be nonnegative, got {value} at index {index}")
        return values
