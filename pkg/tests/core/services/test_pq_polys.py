from fractions import Fraction

import pytest

from core.models.apoly import APoly
from core.models.errors import ScopeError
from core.services.pq_polys import PQPolys

# [power of l][power of a], ascending; P_n first, then Q_n
PQ_TABLE = {
    0: ([[1]], [[1]]),
    1: ([[], [0, 1]], [[3], [0, 1]]),
    2: (
        [[0, -6], [0, 0, -1], [0, 0, 1]],
        [[6], [0, 5], [0, 0, 1]],
    ),
    3: (
        [[0, -6, -30], [0, 0, -17, -11], [0, 0, 0, -2, -1], [0, 0, 0, 1]],
        [[6], [0, 11], [0, 0, 6], [0, 0, 0, 1]],
    ),
    4: (
        [
            [0, 0, -36, -180],
            [0, 0, -12, -138, -96],
            [0, 0, 0, -28, -40, -17],
            [0, 0, 0, 0, -2, -3, -1],
            [0, 0, 0, 0, 1],
        ],
        [[], [0, 6], [0, 0, 11], [0, 0, 0, 6], [0, 0, 0, 0, 1]],
    ),
    5: (
        [
            [0, 0, 0, -252, -1260],
            [0, 0, 6, -120, -1182, -852],
            [0, 0, 0, -7, -346, -514, -215],
            [0, 0, 0, 0, -33, -82, -78, -24],
            [0, 0, 0, 0, 0, 0, -5, -4, -1],
            [0, 0, 0, 0, 0, 1],
        ],
        [[], [0, -6], [0, 0, -5], [0, 0, 0, 5], [0, 0, 0, 0, 5], [0, 0, 0, 0, 0, 1]],
    ),
    6: (
        [
            [0, 0, 0, 0, -2016, -10080],
            [0, 0, -12, 48, -1212, -10968, -8076],
            [0, 0, 0, 2, -170, -4070, -6146, -2572],
            [0, 0, 0, 0, 8, -617, -1516, -1353, -407],
            [0, 0, 0, 0, 0, -28, -115, -200, -134, -32],
            [0, 0, 0, 0, 0, 0, 5, -5, -9, -5, -1],
            [0, 0, 0, 0, 0, 0, 1],
        ],
        [
            [],
            [0, 12],
            [0, 0, 4],
            [0, 0, 0, -15],
            [0, 0, 0, 0, -5],
            [0, 0, 0, 0, 0, 3],
            [0, 0, 0, 0, 0, 0, 1],
        ],
    ),
}


@pytest.mark.parametrize("n", sorted(PQ_TABLE))
def test_pairs_match_reference_table(n):
    expected_p, expected_q = PQ_TABLE[n]
    pair = PQPolys().build_pq(6)[n]

    assert pair.P.to_lists() == expected_p
    assert pair.Q.to_lists() == expected_q


def test_first_pairs():
    pq = PQPolys()

    first = pq.pair(1)
    assert first.P.to_lists() == [[], [0, 1]]
    assert first.Q.to_lists() == [[3], [0, 1]]

    second = pq.pair(2)
    # P_2 = a^2 l^2 - a^2 l - 6a
    assert second.P.to_lists() == [[0, -6], [0, 0, -1], [0, 0, 1]]
    assert pq.p_coeff(2, 1) == APoly.monomial(1, 2)
    assert pq.p_coeff(2, 0) == APoly((0, 6))


def test_third_pair_coefficients():
    pq = PQPolys()

    assert pq.p_coeff(3, 0) == APoly((0, 6, 30))
    assert pq.p_coeff(3, 1) == APoly((0, 0, 17, 11))
    assert pq.p_coeff(3, 2) == APoly((0, 0, 0, 2, 1))
    assert pq.pair(3).P.evaluate(1, 2) == -96
    assert pq.q_coeff(3, 1) == APoly((0, 11))


def test_q_six_is_the_falling_product():
    pq = PQPolys()

    assert pq.pair(6).Q.evaluate(1, 3) == 720
    assert pq.q_coeff(6, 0).is_zero()


def test_p_coeff_outside_range_is_zero():
    pq = PQPolys()

    assert pq.p_coeff(3, 3).is_zero()
    assert pq.p_coeff(3, -1).is_zero()
    assert pq.p_coeff(0, 0) == APoly.constant(1)


def test_build_pq_is_ascending():
    pairs = PQPolys().build_pq(5)

    assert [pair.n for pair in pairs] == [0, 1, 2, 3, 4, 5]
    assert all(pair.P.degree == pair.n for pair in pairs)

    with pytest.raises(ScopeError):
        PQPolys().build_pq(-1)


def test_closed_form_checks():
    report = PQPolys().closed_form_checks(25)

    assert report.passed
    assert report.check_id == "closed-forms"
    assert report.checked > 25

    with pytest.raises(ScopeError):
        PQPolys().closed_form_checks(2)


@pytest.mark.parametrize("a, l, n", [(1, 0, 1), (1, 1, 2), (2, 3, 5), (3, 2, 8), (1, 4, 0)])
def test_identity_prop41(a, l, n):
    report = PQPolys().verify_identity_prop41(a, l, n)

    assert report.passed
    assert report.domain["m"] == (2 * a + 1) * l + 5


def test_identity_prop41_scope():
    with pytest.raises(ScopeError):
        PQPolys().verify_identity_prop41(1, 1, 4)

    with pytest.raises(ScopeError):
        PQPolys().verify_identity_prop41(Fraction(3, 2), 1, 1)


def test_sign_threshold_values():
    pq = PQPolys()

    assert pq.sign_threshold(3, 1) == 3
    assert pq.sign_threshold(4, 1) == 6
    assert pq.sign_threshold(4, 2) == 4 + 6 + 2

    with pytest.raises(ScopeError):
        pq.sign_threshold(2, 1)

    with pytest.raises(ScopeError):
        pq.sign_threshold(3, Fraction(1, 2))


def test_prop42_and_prop43_on_samples():
    pq = PQPolys()

    assert pq.verify_prop42(3, [1, 2]).passed
    assert pq.verify_prop43(3, [1, 2]).passed

    with pytest.raises(ScopeError):
        pq.verify_prop42(3, [Fraction(1, 2)])


def test_sign_bound_at_diagonal():
    report = PQPolys().check_sign_bound(3, 1, 2)

    assert report.passed
    assert report.checked == 3


def test_pq_table_rows():
    rows = PQPolys().pq_table_rows(2)

    assert [row["n"] for row in rows] == [0, 1, 2]
    assert rows[1]["Q"] == [[3], [0, 1]]
    assert set(rows[0]) == {"n", "P", "Q", "P_text", "Q_text"}
