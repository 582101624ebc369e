from fractions import Fraction

import pytest

from core.models.concavity_report import ConcavityReport


def test_ok_and_violated_constructors():
    assert ConcavityReport.ok().holds

    report = ConcavityReport.violated(2, Fraction(1), Fraction(2))
    assert not report.holds
    assert report.first_violation == 2


def test_holds_must_match_violation_index():
    with pytest.raises(ValueError):
        ConcavityReport(holds=True, first_violation=1)
