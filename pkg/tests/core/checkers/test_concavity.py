from fractions import Fraction

import pytest

from core.checkers.concavity import ConcavityChecker
from core.models.errors import PreconditionError


def test_log_concavity_reports_first_violation():
    checker = ConcavityChecker()

    assert checker.is_log_concave([1, 2, 1]).holds

    report = checker.is_log_concave([1, 1, 2])
    assert not report.holds
    assert report.first_violation == 1
    assert report.lhs == 1
    assert report.rhs == 2


def test_strong_log_concavity_differs_on_internal_zeros():
    checker = ConcavityChecker()

    assert checker.is_log_concave([1, 0, 0, 1]).holds
    assert not checker.is_strongly_log_concave([1, 0, 0, 1]).holds
    assert checker.is_strongly_log_concave([1, 3, 3, 1]).holds


def test_unimodality():
    checker = ConcavityChecker()

    assert checker.is_unimodal([1, 3, 3, 2]).holds
    assert checker.is_unimodal([]).holds

    report = checker.is_unimodal([1, 3, 2, 4])
    assert report.first_violation == 3


def test_negative_entries_are_rejected():
    with pytest.raises(ValueError):
        ConcavityChecker().is_log_concave([1, -1, 1])


def test_hadamard_check_requires_log_concave_factors():
    checker = ConcavityChecker()

    with pytest.raises(PreconditionError):
        checker.hadamard_partial_sum_check([1, 1, 2], [1, 1, 1])

    with pytest.raises(PreconditionError):
        checker.hadamard_partial_sum_check([1, 1], [1, 1, 1])


def test_hadamard_partial_sums():
    checker = ConcavityChecker()

    assert checker.hadamard_partial_sums([1, 2, 1], [1, 2, 4]) == [1, 5, 9]
    assert checker.hadamard_partial_sum_check([1, 2, 1], [1, 2, 4]).holds


@pytest.mark.parametrize("a", [1, 2, Fraction(1, 2), Fraction(7, 3)])
def test_sequence_oracle_holds_for_f_sequences(a):
    assert ConcavityChecker().sequence_oracle(12, a).holds
