from fractions import Fraction

import pytest

from core.helpers.range_parser import RangeParser


def test_parse_ints_supports_ranges_and_lists():
    parser = RangeParser()

    assert parser.parse_ints("2:5") == (2, 3, 4, 5)
    assert parser.parse_ints("1,4:5, 9") == (1, 4, 5, 9)
    assert parser.parse_ints("7") == (7,)


def test_parse_rationals_keeps_values_exact():
    parser = RangeParser()

    assert parser.parse_rationals("5/2,1:2,0.5") == (
        Fraction(5, 2),
        Fraction(1),
        Fraction(2),
        Fraction(1, 2),
    )


@pytest.mark.parametrize("raw", ["", "1,,2", "5:2", "x", "1.5"])
def test_parse_ints_rejects_malformed_input(raw):
    with pytest.raises(ValueError):
        RangeParser().parse_ints(raw)


@pytest.mark.parametrize("raw", ["1/0", "abc", ","])
def test_parse_rationals_rejects_malformed_input(raw):
    with pytest.raises(ValueError):
        RangeParser().parse_rationals(raw)
