import math
from collections.abc import Iterable
from fractions import Fraction
from typing import Union

from core.models.errors import ScopeError
from core.models.f_sequence import FSequence
from core.models.peak_comparison import PeakComparison
from core.models.peak_report import PeakReport
from core.models.seq_spec import SeqSpec

Weight = Union[int, Fraction]


class BinomCore:
    def binomial(self, m: int, i: int) -> int:
        if m < 0:
            raise ScopeError(f"binomial needs m >= 0, got {m}")
        if i < 0 or i > m:
            return 0
        return math.comb(m, i)

    def weighted_partial_sum(self, m: int, a: Weight, r: int) -> Fraction:
        spec = SeqSpec(m, Fraction(a))
        self._check_index(spec, r)

        p, q = spec.a.numerator, spec.a.denominator
        # sum C(m,i) p^i q^(r-i), divided by q^r at the end
        total = sum(math.comb(m, i) * p**i * q ** (r - i) for i in range(r + 1))
        return Fraction(total, q**r)

    def f_value(self, m: int, a: Weight, r: int) -> Fraction:
        spec = SeqSpec(m, Fraction(a))
        partial = self.weighted_partial_sum(m, spec.a, r)
        return partial / (1 + spec.a) ** r

    def f_sequence(self, spec: SeqSpec) -> FSequence:
        p, q = spec.a.numerator, spec.a.denominator
        base = p + q

        values: list[Fraction] = []
        running = 0
        binom = 1
        p_power = 1
        denominator = 1

        # running holds N_r = sum_{i<=r} C(m,i) p^i q^(r-i), so f(r) = N_r / (p+q)^r
        for r in range(spec.m + 1):
            if r:
                binom = binom * (spec.m - r + 1) // r
                p_power *= p
                denominator *= base
            running = running * q + binom * p_power
            values.append(Fraction(running, denominator))

        return FSequence(spec=spec, values=tuple(values))

    def predicted_peak(self, m: int, a: Weight) -> int:
        weight = self.integer_weight(a)
        if m < 2:
            raise ScopeError(f"the peak formula needs m >= 2, got {m}")
        return (weight * m - (weight - 1)) // (2 * weight + 1) + 1

    def peak_formula(self, m: int, a: Weight) -> int:
        """The same closed form as predicted_peak, evaluated for any rational a > 0."""
        weight = SeqSpec(m, Fraction(a)).a
        return math.floor((weight * m - (weight - 1)) / (2 * weight + 1)) + 1

    def exceptional_m_set(self, a: Weight) -> frozenset[int]:
        weight = self.integer_weight(a)
        exceptional = {3, 2 * weight + 4, 4 * weight + 5}
        if weight == 1:
            exceptional.add(6 * weight + 6)
        return frozenset(exceptional)

    def observed_peak(self, seq: FSequence) -> PeakReport:
        peak_value = max(seq.values)
        ties = tuple(r for r, value in enumerate(seq.values) if value == peak_value)
        return PeakReport(argmax_min=ties[0], tie_indices=ties, peak_value=peak_value)

    def compare_peak(self, m: int, a: Weight) -> PeakComparison:
        spec = SeqSpec(m, Fraction(a))
        if m < 2:
            raise ScopeError(f"peak comparison needs m >= 2, got {m}")

        observed = self.observed_peak(self.f_sequence(spec))

        if spec.integer_weight:
            return PeakComparison(
                m=m,
                a=spec.a,
                predicted=self.predicted_peak(m, spec.a),
                observed=observed,
                integer_weight=True,
                exceptional=m in self.exceptional_m_set(spec.a),
            )

        return PeakComparison(
            m=m,
            a=spec.a,
            predicted=self.peak_formula(m, spec.a),
            observed=observed,
            integer_weight=False,
            exceptional=False,
        )

    def peak_scan(self, a: Weight, m_values: Iterable[int]) -> list[PeakComparison]:
        return [self.compare_peak(m, a) for m in m_values]

    def integer_weight(self, a: Weight) -> int:
        weight = Fraction(a)
        if weight.denominator != 1 or weight < 1:
            raise ScopeError(
                f"this claim is proven for integer a >= 1 only, got a={weight}"
            )
        return weight.numerator

    def _check_index(self, spec: SeqSpec, r: int) -> None:
        if not 0 <= r <= spec.m:
            raise ScopeError(f"index r must satisfy 0 <= r <= m={spec.m}, got {r}")
