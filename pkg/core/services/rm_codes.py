from fractions import Fraction
from typing import Any, Optional

from core.models.code_params import CodeParams
from core.models.errors import ScopeError, SuiteCorruptionError
from core.models.peak_report import PeakReport
from core.models.seq_spec import SeqSpec
from core.models.verification_report import ComparisonLog, VerificationReport
from core.services.binom_core import BinomCore


class RMCodes:
    def __init__(self, binom_core: Optional[BinomCore] = None) -> None:
        self.binom_core = binom_core or BinomCore()

    def rm_params(self, r: int, m: int) -> CodeParams:
        if not 0 <= r <= m:
            raise ScopeError(f"RM(r, m) needs 0 <= r <= m, got r={r}, m={m}")

        k = sum(self.binom_core.binomial(m, i) for i in range(r + 1))
        return CodeParams(r=r, m=m, n=2**m, k=k, d=2 ** (m - r))

    def rate_distance_product(self, r: int, m: int) -> Fraction:
        params = self.rm_params(r, m)
        product = Fraction(params.k * params.d, params.n)

        if product != self.binom_core.f_value(m, 1, r):
            raise SuiteCorruptionError(f"kd/n differs from f(m, 1, r) at r={r}, m={m}")
        return product

    def best_r(self, m: int) -> PeakReport:
        if m < 2:
            raise ScopeError(f"best_r needs m >= 2, got {m}")

        products = [self.rate_distance_product(r, m) for r in range(m + 1)]
        best = max(products)
        ties = tuple(r for r, value in enumerate(products) if value == best)
        report = PeakReport(argmax_min=ties[0], tie_indices=ties, peak_value=best)

        sequence = self.binom_core.f_sequence(SeqSpec(m, Fraction(1)))
        if report != self.binom_core.observed_peak(sequence):
            raise SuiteCorruptionError(f"best RM order disagrees with the f-sequence peak at m={m}")
        return report

    def rm_table(self, m: int) -> list[dict[str, Any]]:
        best = set(self.best_r(m).tie_indices) if m >= 2 else set(range(m + 1))
        rows = []
        for r in range(m + 1):
            params = self.rm_params(r, m)
            rows.append(
                {
                    "m": m,
                    "r": r,
                    "n": params.n,
                    "k": params.k,
                    "d": params.d,
                    "kd/n": self.rate_distance_product(r, m),
                    "best": r in best,
                }
            )
        return rows

    def check_rm_identity(self, m: int) -> VerificationReport:
        log = ComparisonLog("rm-identity", {"m": m})
        for r in range(m + 1):
            params = self.rm_params(r, m)
            log.compare(
                Fraction(params.k * params.d, params.n),
                "==",
                self.binom_core.f_value(m, 1, r),
                r=r,
            )

        if m >= 2:
            best = self.best_r(m)
            if m in self.binom_core.exceptional_m_set(1):
                log.note(f"m={m} is exceptional for a=1; best r = {list(best.tie_indices)}")
            else:
                log.compare(
                    best.argmax_min, "==", self.binom_core.predicted_peak(m, 1), note="best r"
                )
        return log.report()
