import math
from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Any, Union

from core.models.apoly import APoly
from core.models.errors import ScopeError, SingularEvaluationError, SuiteCorruptionError
from core.models.lpoly import LPoly
from core.models.pq_pair import PQPair
from core.models.verification_report import ComparisonLog, VerificationReport

Weight = Union[int, Fraction]

A = APoly.monomial(1, 1)


@lru_cache(maxsize=None)
def _pq_pair(n: int) -> PQPair:
    if n == 0:
        return PQPair(n=0, P=LPoly.constant(1), Q=LPoly.constant(1))

    previous = _pq_pair(n - 1)
    k = n - 1
    # Q_{k+1} = (al + 3 - k) Q_k
    Q = previous.Q * LPoly.linear(A, APoly.constant(3 - k))
    # P_{k+1} = a((a+1)l + 3 + k) P_k - a Q_{k+1}
    P = previous.P * LPoly.linear(APoly((0, 1, 1)), APoly((0, 3 + k))) - Q * A
    return PQPair(n=n, P=P, Q=Q)


class PQPolys:
    """The polynomial pairs P_n(a, l), Q_n(a, l) and the facts proven about them.

    Coefficients follow the sign convention P_n = a^n l^n - sum p_{n,i} l^i and
    Q_n = sum q_{n,i} l^i; the pair is never reduced.
    """

    def build_pq(self, n_max: int) -> list[PQPair]:
        if n_max < 0:
            raise ScopeError(f"n_max must be nonnegative, got {n_max}")
        # ascending so the cached recursion never goes deeper than one level
        return [_pq_pair(n) for n in range(n_max + 1)]

    def pair(self, n: int) -> PQPair:
        return self.build_pq(n)[n]

    def coeff(self, poly: LPoly, j: int) -> APoly:
        return poly.coeff(j)

    def p_coeff(self, n: int, i: int) -> APoly:
        """p_{n,i}: the negated coefficient of l^i in P_n, zero outside 0 <= i < n."""
        if n == 0:
            return self.coeff(self.pair(0).P, i)
        if not 0 <= i < n:
            return APoly()
        return -self.coeff(self.pair(n).P, i)

    def q_coeff(self, n: int, i: int) -> APoly:
        return self.coeff(self.pair(n).Q, i)

    def closed_form_checks(self, n_max: int) -> VerificationReport:
        if n_max < 3:
            raise ScopeError(f"closed-form checks need n_max >= 3, got {n_max}")

        pairs = self.build_pq(n_max)
        checked = 0

        def expect(label: str, got: Any, want: Any) -> None:
            nonlocal checked
            checked += 1
            if got != want:
                raise SuiteCorruptionError(f"{label}: got {got}, expected {want}")

        expect("p_{0,0}", self.p_coeff(0, 0), APoly.constant(1))
        expect("p_{1,0}", self.p_coeff(1, 0), APoly())
        expect("p_{2,0}", self.p_coeff(2, 0), APoly((0, 6)))
        expect("p_{3,0}", self.p_coeff(3, 0), APoly((0, 6, 30)))

        for pair in pairs:
            n = pair.n
            expect(f"deg_l P_{n}", pair.P.degree, n)
            expect(f"deg_l Q_{n}", pair.Q.degree, n)
            expect(f"lead P_{n}", pair.P.leading, APoly.monomial(1, n))
            expect(f"lead Q_{n}", pair.Q.leading, APoly.monomial(1, n))
            expect(f"Q_{n} re-expansion", self._expanded_q(n), pair.Q)

        for n in range(n_max):
            expect(
                f"q_{{{n + 1},0}}",
                self.q_coeff(n + 1, 0),
                APoly.constant(math.prod(3 - i for i in range(n + 1))),
            )
            expect(
                f"q_{{{n + 1},{n}}}",
                self.q_coeff(n + 1, n),
                APoly.monomial((6 - n) * (n + 1) // 2, n),
            )
            for j in range(1, n):
                expect(
                    f"q_{{{n + 1},{j}}} recurrence",
                    self.q_coeff(n + 1, j),
                    A * self.q_coeff(n, j - 1) + self.q_coeff(n, j) * (3 - n),
                )
            if n >= 3:
                expect(
                    f"q_{{{n + 1},1}}",
                    self.q_coeff(n + 1, 1),
                    APoly.monomial(6 * (-1) ** (n - 3) * math.factorial(n - 3), 1),
                )
            if n >= 2:
                expect(
                    f"p_{{{n + 1},0}}",
                    self.p_coeff(n + 1, 0),
                    APoly((0, 6, 30)) * APoly.monomial(math.factorial(n + 3) // 120, n - 2),
                )
            if n >= 3:
                expect(
                    f"p_{{{n + 1},0}} step",
                    self.p_coeff(n + 1, 0),
                    self.p_coeff(n, 0) * APoly.monomial(n + 3, 1),
                )
            if n >= 1:
                expect(
                    f"p_{{{n + 1},{n}}}",
                    self.p_coeff(n + 1, n),
                    self.p_coeff(n, n - 1) * APoly((0, 1, 1))
                    - APoly.monomial(n * (n - 3) // 2, n + 1),
                )
                for j in range(n):
                    shifted = self.p_coeff(n, j - 1) * APoly((0, 1, 1)) + self.p_coeff(
                        n, j
                    ) * APoly((0, 3 + n))
                    expect(
                        f"p_{{{n + 1},{j}}} recurrence",
                        self.p_coeff(n + 1, j),
                        shifted + A * self.q_coeff(n + 1, j),
                    )
                    expect(
                        f"p_{{{n + 1},{j}}} recurrence in q_n",
                        self.p_coeff(n + 1, j),
                        shifted
                        + APoly.monomial(1, 2) * self.q_coeff(n, j - 1)
                        + APoly((0, 3 - n)) * self.q_coeff(n, j),
                    )

        return VerificationReport(
            check_id="closed-forms", domain={"n_max": n_max}, checked=checked
        )

    def verify_identity_prop41(self, a: Weight, l: int, n: int) -> VerificationReport:
        weight = self._integer_weight(a)
        top = weight * l + 2
        if l < 0 or not 0 <= n <= top:
            raise ScopeError(f"prop41 needs l >= 0 and 0 <= n <= al+2 = {top}, got l={l}, n={n}")

        m = (2 * weight + 1) * l + 5
        pair = self.pair(n)
        q_value = pair.Q.evaluate(weight, l)
        if q_value == 0:
            raise SingularEvaluationError(f"Q_{n}({weight}, {l}) = 0")

        remainder = math.comb(m, top + 1) * weight**top - sum(
            math.comb(m, i) * weight**i for i in range(top + 1 - n, top + 1)
        )
        closed = (
            pair.P.evaluate(weight, l)
            / q_value
            * math.comb(m, top + 1 - n)
            * weight ** (top - n)
        )

        log = ComparisonLog("prop41", {"a": weight, "l": l, "n": n, "m": m})
        log.compare(remainder, "==", closed)
        return log.report()

    def verify_prop42(self, n: int, a_samples: Iterable[Weight]) -> VerificationReport:
        samples = self._samples(n, a_samples)
        log = ComparisonLog("prop42", {"n": n, "a": samples})
        coefficient = self.p_coeff(n, n - 1)

        for a in samples:
            log.compare(
                coefficient.evaluate(a),
                ">=",
                a**n * self.sign_threshold(n, a),
                a=a,
            )
        return log.report()

    def verify_prop43(self, n: int, a_samples: Iterable[Weight]) -> VerificationReport:
        samples = self._samples(n, a_samples)
        log = ComparisonLog("prop43", {"n": n, "a": samples})

        for i in range(1, n):
            p = self.p_coeff(n, i - 1)
            q_lower = self.q_coeff(n, i - 1)
            q_upper = self.q_coeff(n, i)
            for a in samples:
                p_value = p.evaluate(a)
                log.compare(
                    p_value,
                    ">",
                    abs(q_lower.evaluate(a)) + (n - 3) * abs(q_upper.evaluate(a)),
                    a=a,
                    i=i,
                )
                log.compare(p_value, ">", 0, note="positivity", a=a, i=i)
        return log.report()

    def sign_threshold(self, n: int, a: Weight) -> Fraction:
        """T(n, a) = a^(n-2) + (n-1) a^(n-3) + n(n-3)/2 a^(n-4)."""
        weight = Fraction(a)
        if n < 3:
            raise ScopeError(f"the sign threshold needs n >= 3, got {n}")
        if weight < 1:
            raise ScopeError(f"the sign threshold needs a >= 1, got {weight}")
        return (
            weight ** (n - 2)
            + (n - 1) * weight ** (n - 3)
            + Fraction(n * (n - 3), 2) * weight ** (n - 4)
        )

    def check_sign_bound(self, n: int, a: Weight, l: int) -> VerificationReport:
        weight = Fraction(a)
        threshold = self.sign_threshold(n, weight)
        if l < 0:
            raise ScopeError(f"l must be nonnegative, got {l}")

        pair = self.pair(n)
        p_value = pair.P.evaluate(weight, l)
        log = ComparisonLog("sign", {"n": n, "a": weight, "l": l})
        log.compare(p_value, "<", (l - threshold) * weight**n * Fraction(l) ** (n - 1))

        if n == l + 1:
            log.compare(p_value, "<", 0, note="P_{l+1}(a,l) negative")
            log.compare(pair.Q.evaluate(weight, l), ">", 0, note="Q_{l+1}(a,l) positive")
        return log.report()

    def pq_table_rows(self, n_max: int) -> list[dict[str, Any]]:
        return [
            {
                "n": pair.n,
                "P": pair.P.to_lists(),
                "Q": pair.Q.to_lists(),
                "P_text": str(pair.P),
                "Q_text": str(pair.Q),
            }
            for pair in self.build_pq(n_max)
        ]

    def _expanded_q(self, n: int) -> LPoly:
        return reduce(
            lambda acc, i: acc * LPoly.linear(A, APoly.constant(3 - i)),
            range(n),
            LPoly.constant(1),
        )

    def _samples(self, n: int, a_samples: Iterable[Weight]) -> list[Fraction]:
        if n < 3:
            raise ScopeError(f"needs n >= 3, got {n}")
        samples = [Fraction(a) for a in a_samples]
        for a in samples:
            if a < 1:
                raise ScopeError(f"sampled a must be >= 1, got {a}")
        return samples

    def _integer_weight(self, a: Weight) -> int:
        weight = Fraction(a)
        if weight.denominator != 1 or weight < 1:
            raise ScopeError(f"integer a >= 1 required, got a={weight}")
        return weight.numerator
