from fractions import Fraction

import pytest

from core.models.errors import ScopeError
from core.services.rm_codes import RMCodes


def test_rm_params_small_example():
    params = RMCodes().rm_params(1, 3)

    assert params.as_triple() == (8, 4, 4)
    assert RMCodes().rate_distance_product(1, 3) == 2


def test_rm_params_scope():
    with pytest.raises(ScopeError):
        RMCodes().rm_params(4, 3)


def test_best_r_matches_peak():
    best = RMCodes().best_r(7)

    assert best.argmax_min == 3
    assert best.unique
    assert best.peak_value == 8


def test_rm_table_rows():
    rows = RMCodes().rm_table(3)

    assert [row["r"] for row in rows] == [0, 1, 2, 3]
    assert [row["kd/n"] for row in rows] == [1, 2, Fraction(7, 4), 1]
    assert [row["best"] for row in rows] == [False, True, False, False]


def test_rm_identity_reports():
    codes = RMCodes()

    assert codes.check_rm_identity(7).passed

    exceptional = codes.check_rm_identity(6)
    assert exceptional.passed
    assert exceptional.notes
