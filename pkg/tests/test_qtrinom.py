"""Trinomial analogues: the round bracket, the T forms, and their limits."""

import pytest

from qtrin.qcore import QPoly, QSeries, qmono, truncate
from qtrin.qtrinom import t0_limit, t_n, trinomial, trinomial_limit

# frozen small cases, quarter-unit exponent -> coefficient
ROUND_4_1_0 = {0: 1, 8: 1, 12: 2, 16: 3, 20: 3, 24: 3, 28: 2, 32: 2, 36: 1, 40: 1}
ROUND_3_0_M1 = {4: 1, 8: 1, 12: 1, 16: 1, 20: 1, 24: 1}
T0_4_2 = {0: 1, 4: 1, 8: 2, 12: 2, 16: 2, 20: 1, 24: 1}
T1_3_1 = {0: 1, 4: 2, 8: 2, 12: 1}
T0_5_0 = {2: 1, 6: 2, 10: 4, 14: 5, 18: 7, 22: 7, 26: 7, 30: 6, 34: 5, 38: 3,
          42: 2, 46: 1, 50: 1}


def test_frozen_values():
    assert trinomial(4, 1, 0) == QPoly(ROUND_4_1_0)
    assert trinomial(3, 0, -1) == QPoly(ROUND_3_0_M1)
    assert t_n(0, 4, 2) == QPoly(T0_4_2)
    assert t_n(1, 3, 1) == QPoly(T1_3_1)
    # L - a odd puts the T form on half-integral powers
    assert t_n(0, 5, 0) == QPoly(T0_5_0)


def test_support_and_degenerate_arguments():
    assert trinomial(3, 0, 4) == QPoly.zero()
    assert t_n(0, 3, -4) == QPoly.zero()
    assert trinomial(0, 5, 0) == QPoly.one()
    with pytest.raises(ValueError):
        trinomial(-1, 0, 0)
    with pytest.raises(ValueError):
        t_n(0, -2, 0)


def test_t_form_is_even_in_a():
    for n in range(3):
        for L in range(8):
            for a in range(L + 1):
                assert t_n(n, L, a) == t_n(n, L, -a)


def test_round_bracket_shift_symmetry():
    for L in range(7):
        for a in range(-L, L + 1):
            for b in range(-3, 4):
                lhs = trinomial(L, b, a)
                rhs = qmono(1, 4 * a * (a - b)) * trinomial(L, b - 2 * a, -a)
                assert lhs == rhs, (L, b, a)


def test_t_form_against_dualized_round_bracket():
    for n in range(3):
        for L in range(8):
            for a in range(-L, L + 1):
                lhs = t_n(n, L, a)
                rhs = qmono(1, 2 * (L - a) * (L + a - n)) * trinomial(
                    L, a - n, a
                ).dual()
                assert lhs == rhs, (n, L, a)


def test_counting_at_q_equals_one():
    # row L of the three-step path triangle, independent of b
    row = {0: 1}
    for L in range(1, 9):
        row = {
            a: row.get(a - 1, 0) + row.get(a, 0) + row.get(a + 1, 0)
            for a in range(-L, L + 1)
        }
        for a in range(-L, L + 1):
            for b in (-1, 0, 2):
                assert trinomial(L, b, a).eval_at_one() == row[a]


def test_diagonal_limit():
    # [L, a; a] tends to 1/(q)_inf; at L = 12 the first nine coefficients
    # are already settled
    order4 = 32
    want = trinomial_limit(order4)
    for a in (0, 1, 2):
        assert truncate(trinomial(12, a, a), order4) == want


def test_t0_limits_split_by_parity():
    order4 = 24
    even = t0_limit("even", order4)
    odd = t0_limit("odd", order4)
    assert truncate(t_n(0, 14, 0), order4) == even
    assert truncate(t_n(0, 15, 0), order4) == odd
    # the two limits sum to the even-exponent part doubled... their sum and
    # difference reproduce the two infinite products, so they must differ
    assert even != odd
    with pytest.raises(ValueError):
        t0_limit("sideways", order4)


def test_limit_series_have_integer_support():
    # the parity-split limits live on half-integral powers
    odd = t0_limit("odd", 20)
    assert all(e % 2 == 0 for e, _ in odd.sorted_items())
    assert any(e % 4 for e, _ in odd.sorted_items())
    assert trinomial_limit(20) == QSeries(
        {0: 1, 4: 1, 8: 2, 12: 3, 16: 5, 20: 7}, 20
    )
