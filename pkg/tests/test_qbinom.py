"""Gaussian binomials, Pochhammer products, and the four finite analogues
of the classical binomial summations."""

import pytest

from qtrin.qbinom import (
    APPENDIX_IDENTITIES,
    PochSpec,
    appendix_identity,
    poch,
    poch_general,
    qbin,
)
from qtrin.qcore import QPoly, qmono, qpoly_sum

# partitions of n inside a 3 x 5 box, n = 0..15
QBIN_8_3 = [1, 1, 2, 3, 4, 5, 6, 6, 6, 6, 5, 4, 3, 2, 1, 1]
# partitions of n inside a 2 x 4 box
QBIN_6_2 = [1, 1, 2, 2, 3, 2, 2, 1, 1]


def from_dense(coeffs, scale=4):
    return qpoly_sum(qmono(c, scale * e) for e, c in enumerate(coeffs))


def box_partitions(rows: int, cols: int) -> list[int]:
    # number of partitions of n with at most `rows` parts, each at most `cols`
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def count(n: int, r: int, c: int) -> int:
        if n == 0:
            return 1
        if r == 0 or c == 0:
            return 0
        with_max = count(n - c, r - 1, c) if n >= c else 0
        return count(n, r, c - 1) + with_max

    return [count(n, rows, cols) for n in range(rows * cols + 1)]


def test_frozen_values():
    assert qbin(8, 3) == from_dense(QBIN_8_3)
    assert qbin(6, 2) == from_dense(QBIN_6_2)
    assert qbin(5, 2) == from_dense([1, 1, 2, 2, 2, 1, 1])


def test_box_partition_oracle():
    for n in range(12):
        for a in range(n + 1):
            assert qbin(n, a) == from_dense(box_partitions(a, n - a)), (n, a)


def test_out_of_range_is_zero():
    assert qbin(5, -1) == QPoly.zero()
    assert qbin(5, 6) == QPoly.zero()
    assert qbin(-1, 0) == QPoly.zero()
    assert qbin(0, 0) == QPoly.one()


def test_symmetry_and_duality():
    for n in range(16):
        for a in range(n + 1):
            assert qbin(n, a) == qbin(n, n - a)
            assert qbin(n, a).dual() == qmono(1, -4 * a * (n - a)) * qbin(n, a)


def test_pascal_recurrence():
    for n in range(1, 16):
        for a in range(n + 1):
            assert qbin(n, a) == qbin(n - 1, a - 1) + qmono(1, 4 * a) * qbin(
                n - 1, a
            )


def test_pochhammer_products():
    # (q)_3 and (q)_4 expanded by hand
    assert poch(3) == from_dense([1, -1, -1, 0, 1, 1, -1])
    assert poch(4) == from_dense([1, -1, -1, 0, 0, 2, 0, 0, -1, -1, 1])
    assert poch(0) == QPoly.one()
    # (aq; q)_n as a general shifted product
    assert poch_general(PochSpec(1, 4, 3)) == poch(3)
    assert poch_general(PochSpec(-1, 0, 1)) == QPoly.const(2)
    assert poch_general(PochSpec(1, 2, 2)) == (
        QPoly({0: 1, 2: -1}) * QPoly({0: 1, 6: -1})
    )


def test_finite_binomial_theorem_at_minus_one():
    # (-1; q)_L = sum_k q^binom(k,2) [L, k]
    for L in range(20):
        lhs = poch_general(PochSpec(-1, 0, L))
        rhs = qpoly_sum(
            qmono(1, 4 * (k * (k - 1) // 2)) * qbin(L, k) for k in range(L + 1)
        )
        assert lhs == rhs


@pytest.mark.parametrize("name", APPENDIX_IDENTITIES)
def test_summation_identities_small_box(name):
    for L in range(5):
        for a in range(5):
            for b in range(-4, 5):
                for c in range(3) if name == "qS" else (None,):
                    lhs, rhs = appendix_identity(name, L, a, b, c)
                    assert lhs == rhs, (name, L, a, b, c)


def test_summation_identities_reject_bad_arguments():
    with pytest.raises(ValueError):
        appendix_identity("qcv1", -1, 0, 0)
    with pytest.raises(ValueError):
        appendix_identity("qS", 2, 1, 0, None)
    with pytest.raises(ValueError):
        appendix_identity("nosuch", 2, 1, 0)
