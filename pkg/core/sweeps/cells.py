"""Per-cell check functions.

Module-level so they pickle by reference into worker processes. Each returns a
VerificationReport; a ScopeError marks the cell as out of scope.
"""

from collections.abc import Iterable
from fractions import Fraction
from typing import Any, Optional

from core.checkers.concavity import ConcavityChecker
from core.checkers.inequality_suite import InequalitySuite
from core.models.concavity_report import ConcavityReport
from core.models.errors import ScopeError, SuiteCorruptionError
from core.models.seq_spec import SeqSpec
from core.models.verification_report import ComparisonLog, VerificationReport
from core.services.asymptotics import Asymptotics
from core.services.binom_core import BinomCore
from core.services.distribution_builder import DistributionBuilder
from core.services.pq_polys import PQPolys
from core.services.rm_codes import RMCodes

_binom = BinomCore()
_pq = PQPolys()
_suite = InequalitySuite(_binom, _pq)
_concavity = ConcavityChecker(_binom)
_asymptotics = Asymptotics(_binom)
_distribution = DistributionBuilder(_binom)
_rm = RMCodes(_binom)


def _merged(
    check_id: str, domain: dict[str, Any], reports: Iterable[VerificationReport]
) -> VerificationReport:
    reports = list(reports)
    if not reports:
        raise ScopeError(f"{check_id}: no admissible parameters for {domain}")
    return VerificationReport.merge(check_id, domain, reports)


def _record(log: ComparisonLog, report: ConcavityReport, relation: str, note: str) -> None:
    if report.holds:
        log.record_pass()
    else:
        log.compare(report.lhs, relation, report.rhs, note=note, k=report.first_violation)


def log_concavity(m: int, a: Fraction) -> VerificationReport:
    values = _binom.f_sequence(SeqSpec(m, a)).values
    log = ComparisonLog("log-concavity", {"m": m, "a": a})
    _record(log, _concavity.is_log_concave(values), ">=", "log-concave")
    _record(log, _concavity.is_unimodal(values), "<=", "unimodal")
    return log.report()


def strong_log_concavity(m: int, a: Fraction) -> VerificationReport:
    values = _binom.f_sequence(SeqSpec(m, a)).values
    strong = _concavity.is_strongly_log_concave(values)
    if strong.holds != _concavity.is_log_concave(values).holds:
        raise SuiteCorruptionError(
            f"strong and plain log-concavity disagree on f-sequence m={m}, a={a}"
        )

    log = ComparisonLog("strong-log-concavity", {"m": m, "a": a})
    _record(log, strong, ">=", "strongly log-concave")
    return log.report()


def lemma21(m: int, a: Fraction) -> VerificationReport:
    _concavity.sequence_oracle(m, a)
    log = ComparisonLog("lemma21", {"m": m, "a": a})
    log.record_pass()
    return log.report()


def peak(m: int, a: Fraction) -> VerificationReport:
    comparison = _binom.compare_peak(m, a)
    observed = comparison.observed
    log = ComparisonLog("peak", {"m": m, "a": a})

    if not comparison.integer_weight:
        log.note(
            f"a={a}, m={m}: argmax {list(observed.tie_indices)}, "
            f"closed form {comparison.predicted}"
        )
        log.record_pass()
    elif comparison.exceptional:
        log.note(
            f"a={a}, m={m} exceptional: argmax {observed.argmax_min}, "
            f"r_a {comparison.predicted}"
        )
        log.compare(comparison.offset, ">=", 0, note="exceptional offset")
        log.compare(comparison.offset, "<=", 1, note="exceptional offset")
    else:
        log.compare(len(observed.tie_indices), "==", 1, note="unique argmax")
        log.compare(observed.argmax_min, "==", comparison.predicted, note="argmax")
    return log.report()


def prop31(m: int, a: Fraction) -> VerificationReport:
    return _suite.check_prop31(m, a)


def prop32(m: int, a: Fraction) -> VerificationReport:
    return _suite.check_prop32(m, a)


def lemma33(m: int, a: Fraction) -> VerificationReport:
    return _suite.check_lemma33(m, a)


def lemma35(a: Fraction, k: int) -> VerificationReport:
    return _suite.check_lemma35(a, k)


def lemma35_probe(a: Fraction, k: int) -> VerificationReport:
    return _suite.check_lemma35(a, k, probe=True)


def lemma35_bound(a: Fraction, k: int) -> VerificationReport:
    return _suite.check_lemma35_bound(a, k)


def lemma36(m: int, a: Fraction, r: Optional[int] = None) -> VerificationReport:
    if r is not None:
        return _suite.check_lemma36(m, a, r)
    return _merged("lemma36", {"m": m, "a": a}, (_suite.check_lemma36(m, a, i) for i in range(m)))


def lemma37(m: int, a: Fraction, r: Optional[int] = None) -> VerificationReport:
    if r is not None:
        return _suite.check_lemma37(m, a, r)
    top = (m - 1) // 2 if m >= 1 else -1
    return _merged(
        "lemma37", {"m": m, "a": a}, (_suite.check_lemma37(m, a, i) for i in range(top + 1))
    )


def lemma38(a: Fraction, l: int) -> VerificationReport:
    return _suite.check_lemma38(a, l)


def chain(a: Fraction, k: int) -> VerificationReport:
    return _suite.check_chain_structure(a, k)


def residue(m: int, a: Fraction) -> VerificationReport:
    return _suite.check_residues(m, a)


def closed_forms(n: int) -> VerificationReport:
    return _pq.closed_form_checks(n)


def prop41(a: Fraction, l: int, n: Optional[int] = None) -> VerificationReport:
    if n is not None:
        return _pq.verify_identity_prop41(a, l, n)
    top = _binom.integer_weight(a) * l + 2
    return _merged(
        "prop41",
        {"a": a, "l": l},
        (_pq.verify_identity_prop41(a, l, i) for i in range(top + 1)),
    )


def prop42(n: int, a: Fraction) -> VerificationReport:
    return _pq.verify_prop42(n, [a])


def prop43(n: int, a: Fraction) -> VerificationReport:
    return _pq.verify_prop43(n, [a])


def sign(a: Fraction, l: int, n: Optional[int] = None) -> VerificationReport:
    if n is not None:
        return _pq.check_sign_bound(n, a, l)
    return _merged(
        "sign", {"a": a, "l": l}, (_pq.check_sign_bound(i, a, l) for i in range(3, l + 2))
    )


def prop51(m: int, a: Fraction) -> VerificationReport:
    return _asymptotics.sandwich_check(m, a)


def offset(m: int, a: Fraction) -> VerificationReport:
    return _asymptotics.offset_range_check(m, a)


def prop71(a: Fraction, l: int, n: Optional[int] = None) -> VerificationReport:
    if n is not None:
        return _suite.check_prop71(a, l, n)

    weight = _binom.integer_weight(a)
    admissible = [
        i
        for i in range(3, weight * l + 4)
        if Fraction(i - 3, weight) <= l <= _pq.sign_threshold(i, weight)
    ]
    return _merged(
        "prop71", {"a": a, "l": l}, (_suite.check_prop71(a, l, i) for i in admissible)
    )


def normalizer(m: int, a: Fraction) -> VerificationReport:
    return _distribution.check_normalizer(m, a)


def mean(m: int, a: Fraction) -> VerificationReport:
    return _distribution.check_mean(m, a)


def rm_identity(m: int) -> VerificationReport:
    return _rm.check_rm_identity(m)
