from collections.abc import Iterable
from fractions import Fraction
from typing import Optional, Union

from core.models.errors import ScopeError, SuiteCorruptionError
from core.models.residue_info import ResidueInfo, ResidueTag
from core.models.verification_report import ComparisonLog, Counterexample, VerificationReport
from core.services.binom_core import BinomCore
from core.services.pq_polys import PQPolys

Weight = Union[int, Fraction]

# (a, k) where the raw critical inequality on m = (2a+1)k + 3 fails (m = 12, a = 1)
DOCUMENTED_LEMMA35_FAILURES = frozenset({(1, 3)})


class InequalitySuite:
    def __init__(
        self,
        binom_core: Optional[BinomCore] = None,
        pq_polys: Optional[PQPolys] = None,
    ) -> None:
        self.binom_core = binom_core or BinomCore()
        self.pq_polys = pq_polys or PQPolys()

    def check_prop31(self, m: int, a: Weight) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        self._require(m >= 2, f"prop31 needs m >= 2, got {m}")

        excluded = self.binom_core.exceptional_m_set(weight)
        if m in excluded:
            raise ScopeError(f"m={m} lies in the excluded set {sorted(excluded)} for a={weight}")

        r = self.binom_core.predicted_peak(m, weight)
        log = ComparisonLog("prop31", {"m": m, "a": weight})
        log.compare(
            self._window_sum(m, weight, 0, r - 1),
            "<",
            self._term(m, weight, r, r - 1),
            r=r,
        )
        return log.report()

    def check_prop32(self, m: int, a: Weight) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        self._require(m >= 2, f"prop32 needs m >= 2, got {m}")

        r = self.binom_core.predicted_peak(m, weight)
        log = ComparisonLog("prop32", {"m": m, "a": weight})
        # C(m, m+1) = 0 when r = m
        log.compare(
            self._window_sum(m, weight, 0, r),
            ">",
            self._term(m, weight, r + 1, r),
            r=r,
        )
        return log.report()

    def check_lemma33(self, m: int, a: Weight) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        self._require(m >= 4, f"lemma33 needs m >= 4, got {m}")
        self._require(
            (m - 3) % (2 * weight + 1) != 0,
            f"lemma33 needs m != 3 (mod {2 * weight + 1}), got m={m}",
        )

        r = self.binom_core.predicted_peak(m, weight)
        log = ComparisonLog("lemma33", {"m": m, "a": weight})
        w = Fraction(weight)

        for i in range(1, r):
            direct = log.compare(
                self._term(m, w, i - 1, i - 1) + self._term(m, w, i, i),
                "<=",
                self._term(m, w, i + 1, i) - self._term(m, w, i - 1, i - 2),
                note="direct",
                i=i,
            )
            reformulated = log.compare(
                i * (i + 1) * (weight + 1),
                "<=",
                (m - 2 * i - 1) * (m - i + 1) * weight**2,
                note="reformulated",
                i=i,
            )
            if direct != reformulated:
                raise SuiteCorruptionError(
                    f"lemma33 forms disagree at m={m}, a={weight}, i={i}"
                )

        if r <= 1:
            log.note(f"no index below r={r}; nothing to compare")
        return log.report()

    def check_lemma35(self, a: Weight, k: int, probe: bool = False) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        self._require(k >= 0, f"k must be nonnegative, got {k}")
        if not probe:
            self._require(
                self._lemma35_in_scope(weight, k),
                f"lemma35 holds for a >= 2, k >= 3 or a = 1, k >= 4; got a={weight}, k={k}",
            )

        m = (2 * weight + 1) * k + 3
        domain = {"a": weight, "k": k, "m": m}
        if probe:
            domain["probe"] = True

        log = ComparisonLog("lemma35", domain)
        log.compare(
            self._window_sum(m, weight, 0, weight * k + 1),
            "<",
            self._term(m, weight, weight * k + 2, weight * k + 1),
        )
        return log.report()

    def lemma35_margin(self, a: Weight, k: int) -> int:
        w = self.binom_core.integer_weight(a)
        return (
            w**6 * (k**4 - 2 * k**3)
            + w**5 * (5 * k**4 + 3 * k**3 - 30 * k**2)
            + w**4 * (10 * k**4 + 20 * k**3 - 52 * k**2 - 148 * k)
            + w**3 * (2 * k**3 - 44 * k**2 - 208 * k - 240)
            + w**2 * (5 * k**3 + 2 * k**2 + 12 * k)
            - 4 * w * k
            - 4 * k
        )

    def check_lemma35_bound(self, a: Weight, k: int) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        self._require(
            self._lemma35_in_scope(weight, k),
            f"lemma35-bound holds for a >= 2, k >= 3 or a = 1, k >= 4; got a={weight}, k={k}",
        )

        log = ComparisonLog("lemma35-bound", {"a": weight, "k": k})
        margin = self.lemma35_margin(weight, k)
        if log.compare(margin, ">", 0) and not self.check_lemma35(weight, k).passed:
            raise SuiteCorruptionError(
                f"positive lemma35 margin did not imply the inequality at a={weight}, k={k}"
            )
        return log.report()

    def summarize_lemma35_probe(
        self, reports: Iterable[VerificationReport]
    ) -> VerificationReport:
        reports = list(reports)
        swept = {(r.domain["a"], r.domain["k"]) for r in reports}
        expected = DOCUMENTED_LEMMA35_FAILURES & swept

        unexpected: list[Counterexample] = []
        observed: set[tuple[int, int]] = set()
        for report in reports:
            key = (report.domain["a"], report.domain["k"])
            if not report.passed:
                observed.add(key)
                if key not in expected:
                    unexpected.extend(report.counterexamples)

        notes: list[str] = []
        for a, k in sorted(expected - observed):
            unexpected.append(
                Counterexample(
                    params={"a": a, "k": k},
                    lhs=Fraction(0),
                    relation="==",
                    rhs=Fraction(1),
                    note="documented failure did not occur",
                )
            )
        for a, k in sorted(expected & observed):
            notes.append(f"documented failure reproduced at a={a}, k={k}")

        return VerificationReport(
            check_id="lemma35-probe",
            domain={
                "a": sorted({a for a, _ in swept}),
                "k": sorted({k for _, k in swept}),
            },
            counterexamples=tuple(unexpected),
            checked=len(reports),
            notes=tuple(notes),
        )

    def probe_lemma35(self, cells: Iterable[tuple[int, int]]) -> VerificationReport:
        return self.summarize_lemma35_probe(
            self.check_lemma35(a, k, probe=True) for a, k in cells
        )

    def check_lemma36(self, m: int, a: Weight, r: int) -> VerificationReport:
        weight = Fraction(a)
        self._require(weight > 0, f"a must be positive, got {weight}")
        self._require(0 <= r < m, f"lemma36 needs 0 <= r < m, got r={r}, m={m}")

        log = ComparisonLog("lemma36", {"m": m, "a": weight, "r": r})
        if self._window_sum(m, weight, 0, r) >= self._term(m, weight, r + 1, r):
            log.compare(
                self._window_sum(m - 1, weight, 0, r),
                ">",
                self._term(m - 1, weight, r + 1, r),
            )
        else:
            log.note(f"antecedent false at m={m}, r={r}; implication holds vacuously")
        return log.report()

    def check_lemma37(self, m: int, a: Weight, r: int) -> VerificationReport:
        weight = Fraction(a)
        self._require(weight > 0, f"a must be positive, got {weight}")
        self._require(m >= 1 and r >= 0, f"lemma37 needs m >= 1 and r >= 0, got m={m}, r={r}")
        self._require(
            r <= (m - 1) // 2,
            f"lemma37 needs r <= floor((m-1)/2) = {(m - 1) // 2}, got r={r}",
        )

        log = ComparisonLog("lemma37", {"m": m, "a": weight, "r": r})
        if self._window_sum(m, weight, 0, r) >= self._term(m, weight, r + 1, r):
            log.compare(
                self._window_sum(m + 2, weight, 0, r + 1),
                ">",
                self._term(m + 2, weight, r + 2, r + 1),
            )
        else:
            log.note(f"antecedent false at m={m}, r={r}; implication holds vacuously")
        return log.report()

    def check_lemma38(self, a: Weight, l: int) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        self._require(l >= 0, f"l must be nonnegative, got {l}")

        m = (2 * weight + 1) * l + 5
        top = weight * l + 2
        log = ComparisonLog("lemma38", {"a": weight, "l": l, "m": m})
        log.compare(
            self._window_sum(m, weight, 0, top),
            ">",
            self._term(m, weight, top + 1, top),
        )
        return log.report()

    def check_prop71(self, a: Weight, l: int, n: int) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        self._require(n >= 3, f"prop71 needs n >= 3, got {n}")

        lower = Fraction(n - 3, weight)
        upper = self.pq_polys.sign_threshold(n, weight)
        top = weight * l + 2
        if not (lower <= l <= upper and n <= top + 1):
            raise ScopeError(
                f"prop71 window for a={weight}, n={n} is {lower} <= l <= {upper} "
                f"with n <= al+3; got l={l}"
            )

        m = (2 * weight + 1) * l + 5
        log = ComparisonLog("prop71", {"a": weight, "l": l, "n": n, "m": m})
        log.compare(
            self._window_sum(m, weight, top - (n - 1), top),
            ">",
            self._term(m, weight, top + 1, top),
        )
        return log.report()

    def residue_decompose(self, m: int, a: Weight) -> ResidueInfo:
        weight = self.binom_core.integer_weight(a)
        self._require(m >= 3, f"residue decomposition needs m >= 3, got {m}")

        k, offset = divmod(m - 3, 2 * weight + 1)
        if offset == 0:
            info = ResidueInfo(a=weight, m=m, k=k, case_tag=ResidueTag.M3)
        else:
            n, epsilon = divmod(offset + 3, 2)
            info = ResidueInfo(
                a=weight, m=m, k=k, case_tag=ResidueTag.GEN, n=n, epsilon=epsilon
            )

        if info.reconstruct() != m:
            raise SuiteCorruptionError(f"residue decomposition of m={m} does not round-trip")
        if info.peak != self.binom_core.predicted_peak(m, weight):
            raise SuiteCorruptionError(
                f"residue class peak {info.peak} disagrees with r_a({m}) for a={weight}"
            )
        return info

    def check_residues(self, m: int, a: Weight) -> VerificationReport:
        info = self.residue_decompose(m, a)
        log = ComparisonLog("residue", {"m": m, "a": info.a})
        log.compare(info.reconstruct(), "==", m, note="reconstruction")
        log.compare(
            info.peak, "==", self.binom_core.predicted_peak(m, info.a), note="peak index"
        )
        return log.report()

    def check_chain_structure(self, a: Weight, k: int) -> VerificationReport:
        weight = self.binom_core.integer_weight(a)
        self._require(k >= 0, f"k must be nonnegative, got {k}")

        start = (2 * weight + 1) * k
        block = [start + offset for offset in range(3, 2 * weight + 4)]
        peak = {m: self.binom_core.predicted_peak(m, weight) for m in block}

        log = ComparisonLog("chain", {"a": weight, "k": k})
        log.note(f"I_{k} = {block[0]}..{block[-1]}, base m = {start + 5}")
        sub_reports = [self.check_lemma38(weight, k)]

        for m in range(start + 5, start + 2 * weight + 3, 2):
            log.compare(peak[m + 2], "==", peak[m] + 1, note="upward step", m=m)
            if log.compare(peak[m], "<=", (m - 1) // 2, note="lemma37 precondition", m=m):
                sub_reports.append(self.check_lemma37(m, weight, peak[m]))

        downward = [(m, m - 1) for m in range(start + 5, start + 2 * weight + 4, 2)]
        downward.append((start + 4, start + 3))
        for m, below in downward:
            log.compare(peak[below], "==", peak[m], note="downward step", m=m)
            sub_reports.append(self.check_lemma36(m, weight, peak[m]))

        sub_reports.extend(self.check_prop32(m, weight) for m in block)

        return VerificationReport.merge(
            "chain", {"a": weight, "k": k}, [log.report(), *sub_reports]
        )

    def _lemma35_in_scope(self, weight: int, k: int) -> bool:
        return (weight >= 2 and k >= 3) or (weight == 1 and k >= 4)

    def _term(self, m: int, a: Weight, i: int, power: int) -> Fraction:
        return Fraction(self.binom_core.binomial(m, i)) * Fraction(a) ** power

    def _window_sum(self, m: int, a: Weight, lo: int, hi: int) -> Fraction:
        return sum(
            (self._term(m, a, i, i) for i in range(max(lo, 0), hi + 1)),
            Fraction(0),
        )

    def _require(self, condition: bool, message: str) -> None:
        if not condition:
            raise ScopeError(message)
