"""The named polynomial and series identities, each checked as an equality
of exact objects, plus independent combinatorial ground truth where one
side has a direct partition-counting meaning."""

from functools import lru_cache

import pytest

from qtrin.identities import (
    PropParams,
    bmo_check,
    bmo_companion_check,
    bosonic_binomial_transform,
    diagonal_rs,
    even_dual_form,
    even_form,
    gg_check,
    jacobi_triple_check,
    prop5_check,
    prop_check,
    rr_check,
    rr_lhs,
    tainf_check,
)
from qtrin.qcore import qmono, qpoly_sum
from qtrin.virasoro import character


def gap2_partitions(nmax: int, maxpart: int) -> list[int]:
    # partitions with successive parts differing by at least 2, all parts
    # bounded by maxpart
    @lru_cache(maxsize=None)
    def count(n: int, top: int) -> int:
        if n == 0:
            return 1
        if top <= 0:
            return 0
        total = count(n, top - 1)
        if n >= top:
            total += count(n - top, min(top - 2, n - top))
        return total

    return [count(n, maxpart) for n in range(nmax + 1)]


def test_rr_polynomial_counts_gap2_partitions():
    for L in range(2, 12):
        lhs = rr_lhs(L)
        top = lhs.max_exponent() // 4
        counts = gap2_partitions(top, L - 1)
        want = qpoly_sum(qmono(c, 4 * n) for n, c in enumerate(counts))
        assert lhs == want, L


def test_rr_both_closed_forms():
    for L in range(18):
        lhs, rhs_binomial, rhs_trinomial = rr_check(L)
        assert lhs == rhs_binomial, L
        assert lhs == rhs_trinomial, L


def test_goellnitz_gordon(order4=200):
    lhs, rhs = gg_check(order4)
    assert lhs == rhs


def test_jacobi_triple_product(order4=120):
    lhs, rhs = jacobi_triple_check(order4)
    assert lhs == rhs


def test_bmo_pair():
    for L in range(9):
        lhs, rhs = bmo_check(L)
        assert lhs == rhs, L
        lhs, rhs = bmo_companion_check(L)
        assert lhs == rhs, L


def test_diagonal_labels_frozen():
    assert diagonal_rs(5, 7) == ((1, 3), (1, 4))
    assert diagonal_rs(7, 10) == ((1, 3), (2, 7))
    assert diagonal_rs(7, 9) == ((1, 4), (1, 5))
    assert diagonal_rs(3, 4) == ((1, 3),)


def test_parameter_regimes():
    PropParams(1, 4, 5, 3)
    PropParams(2, 4, 7, 3)
    PropParams(3, 4, 5, 3)
    PropParams(4, 7, 10, 3)
    with pytest.raises(ValueError):
        PropParams(1, 4, 7, 3)  # too far from the diagonal
    with pytest.raises(ValueError):
        PropParams(2, 4, 5, 3)
    with pytest.raises(ValueError):
        PropParams(3, 3, 7, 3)  # needs pp < 2p
    with pytest.raises(ValueError):
        PropParams(4, 5, 8, 3)  # needs pp < 3p/2
    with pytest.raises(ValueError):
        PropParams(6, 4, 5, 3)
    with pytest.raises(ValueError):
        PropParams(1, 4, 5, -1)


@pytest.mark.parametrize(
    "family,p,pp",
    [(1, 4, 5), (1, 3, 4), (2, 4, 7), (3, 3, 4), (3, 5, 7), (4, 5, 7), (4, 7, 9)],
)
def test_quadratic_transformations(family, p, pp):
    for L in range(6):
        lhs, rhs = prop_check(PropParams(family, p, pp, L))
        assert lhs == rhs, (family, p, pp, L)


def test_transformed_side_against_direct_forms():
    # families 1 and 2 must reproduce the alternating binomial transform of
    # the bosonic polynomials; families 3 and 4 the even/doubled forms
    for L in range(6):
        lhs, _ = prop_check(PropParams(1, 5, 7, L))
        assert lhs == bosonic_binomial_transform(5, 7, L)
        lhs, _ = prop_check(PropParams(2, 5, 8, L))
        assert lhs == bosonic_binomial_transform(5, 8, L)
        lhs, _ = prop_check(PropParams(3, 4, 5, L))
        assert lhs == even_form(4, 5, L)
        lhs, _ = prop_check(PropParams(4, 7, 10, L))
        assert lhs == even_dual_form(7, 10, L)


def test_rank_family():
    for n in range(1, 5):
        for L in range(7):
            lhs, rhs = prop5_check(n, L)
            assert lhs == rhs, (n, L)
    with pytest.raises(ValueError):
        prop5_check(0, 3)


def test_rank_one_is_the_rr_pair():
    for L in range(12):
        lhs5, rhs5 = prop5_check(1, L)
        lhs, _, rhs_trinomial = rr_check(L)
        assert lhs5 == lhs
        assert rhs5 == rhs_trinomial


def test_rank_limits_hit_characters():
    for n in (1, 2, 3):
        lhs, rhs = tainf_check(n, 80)
        assert lhs == rhs, n
    # rank 1 again: the modulus-5 vacuum character
    lhs, _ = tainf_check(1, 80)
    assert lhs == character(2, 5, 1, 2, 80)
