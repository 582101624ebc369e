from fractions import Fraction

import pytest

from core.models.errors import ScopeError
from core.sweeps import cells


@pytest.mark.parametrize("a", [Fraction(1, 2), Fraction(1), Fraction(7, 3)])
def test_concavity_cells_pass(a):
    assert cells.log_concavity(15, a).passed
    assert cells.strong_log_concavity(8, a).passed
    assert cells.lemma21(10, a).passed


def test_peak_cell_regular_and_exceptional():
    regular = cells.peak(10, Fraction(1))
    assert regular.passed
    assert regular.checked == 2

    exceptional = cells.peak(6, Fraction(1))
    assert exceptional.passed
    assert exceptional.notes


def test_peak_cell_for_rational_weight_records_observation():
    report = cells.peak(9, Fraction(5, 2))

    assert report.passed
    assert report.notes


def test_lemma_cells_cover_all_admissible_r():
    report = cells.lemma36(6, Fraction(2))
    assert report.passed
    assert report.domain == {"m": 6, "a": Fraction(2)}

    assert cells.lemma37(6, Fraction(2)).passed
    assert cells.lemma37(6, Fraction(2), r=1).domain["r"] == 1


def test_cells_without_admissible_parameters_are_out_of_scope():
    with pytest.raises(ScopeError):
        cells.lemma37(0, Fraction(1))

    with pytest.raises(ScopeError):
        cells.sign(Fraction(1), 1)


def test_window_cells():
    assert cells.prop41(Fraction(2), 3).passed
    assert cells.sign(Fraction(1), 4).passed
    assert cells.prop71(Fraction(1), 2).passed


def test_remaining_cells():
    assert cells.closed_forms(5).passed
    assert cells.prop42(5, Fraction(3, 2)).passed
    assert cells.prop43(5, Fraction(2)).passed
    assert cells.prop51(20, Fraction(2)).passed
    assert cells.offset(20, Fraction(2)).passed
    assert cells.normalizer(9, Fraction(5, 2)).passed
    assert cells.mean(9, Fraction(3)).passed
    assert cells.rm_identity(9).passed
    assert cells.residue(20, Fraction(2)).passed
    assert cells.chain(Fraction(2), 2).passed
    assert cells.lemma38(Fraction(2), 2).passed
    assert cells.lemma35(Fraction(2), 4).passed
    assert cells.lemma35_bound(Fraction(2), 4).passed
    assert not cells.lemma35_probe(Fraction(1), 3).passed
