"""Bailey pairs over both kernels, the chain-extending lemma, and the
transforms that move pairs between the binomial and trinomial worlds."""

from random import Random

import pytest

from qtrin.bailey import (
    LEMMA_SPECIALIZATIONS,
    BaileyPair,
    bailey_lemma_sides,
    beta_from_alpha,
    binomial_pair_defects,
    even_embed,
    random_bailey_pair,
    random_trinomial_pair,
    telescoped_column_sides,
    to_binomial,
    to_trinomial,
    trinomial_lemma0_sides,
    trinomial_lemma1_sides,
    trinomial_pair_defects,
    unit_bailey_pair,
)
from qtrin.qbinom import PochSpec, poch, poch_general
from qtrin.qcore import FactoredRatio, QPoly, ratio_equal


def test_unit_pair_beta_is_the_double_pochhammer():
    # relative to a = q the unit pair must have beta_L = 1/((q)_L (q^2)_L)
    pair = unit_bailey_pair((1, 4), 5)
    for L in range(6):
        want = FactoredRatio(
            QPoly.one(),
            tuple(PochSpec(1, 4, L).factors())
            + tuple(PochSpec(1, 8, L).factors()),
        )
        assert ratio_equal(pair.beta[L], want), L
    assert binomial_pair_defects(pair) == ()


def test_unit_pairs_satisfy_defining_relation():
    for a in ((1, 0), (-1, 4), (1, 8)):
        assert binomial_pair_defects(unit_bailey_pair(a, 6)) == ()


def test_beta_from_alpha_round_trip():
    rng = Random("bailey-beta")
    pair = random_bailey_pair((1, 4), 5, rng)
    rebuilt = BaileyPair(
        a=pair.a, alpha=pair.alpha, beta=beta_from_alpha(pair.a, pair.alpha)
    )
    for L in range(6):
        assert ratio_equal(rebuilt.beta[L], pair.beta[L])


def test_random_trinomial_pairs_are_consistent():
    rng = Random("bailey-tri")
    for n in (0, 1):
        pair = random_trinomial_pair(n, 6, rng)
        assert trinomial_pair_defects(pair) == ()


def test_defects_report_failing_indices():
    pair = unit_bailey_pair((1, 4), 4)
    broken = BaileyPair(
        a=pair.a,
        alpha=pair.alpha,
        beta=pair.beta[:2] + (FactoredRatio(QPoly.const(7)),) + pair.beta[3:],
    )
    assert binomial_pair_defects(broken) == (2,)


@pytest.mark.parametrize("label,a,rho1,rho2,m", LEMMA_SPECIALIZATIONS)
def test_lemma_specializations(label, a, rho1, rho2, m):
    rng = Random(f"lemma-{label}")
    for pair in (unit_bailey_pair(a, m), random_bailey_pair(a, m, rng)):
        lhs, rhs = bailey_lemma_sides(pair, rho1, rho2)
        assert ratio_equal(lhs, rhs), label


def test_trinomial_lemmas_on_random_pairs():
    rng = Random("bailey-lemmas")
    for m in (3, 5):
        pair = random_trinomial_pair(0, m, rng)
        lhs, rhs = trinomial_lemma0_sides(pair)
        assert ratio_equal(lhs, rhs), m
        pair = random_trinomial_pair(1, m, rng)
        lhs, rhs = trinomial_lemma1_sides(pair)
        assert ratio_equal(lhs, rhs), m


def test_telescoped_column():
    for m in range(7):
        for a in range(m + 1):
            lhs, rhs = telescoped_column_sides(a, m)
            assert ratio_equal(lhs, rhs), (a, m)


def test_transforms_preserve_validity():
    rng = Random("bailey-xform")
    for n in (0, 1):
        for _ in range(3):
            tri = to_trinomial(random_bailey_pair((1, 0), 5, rng), n)
            assert trinomial_pair_defects(tri) == ()
            binom = to_binomial(random_trinomial_pair(n, 5, rng))
            assert binomial_pair_defects(binom) == ()


def test_transform_round_trip_is_identity():
    rng = Random("bailey-roundtrip")
    for n in (0, 1):
        pair = random_bailey_pair((1, 0), 5, rng)
        back = to_binomial(to_trinomial(pair, n))
        for L in range(6):
            assert ratio_equal(back.alpha[L], pair.alpha[L]), (n, L)
            assert ratio_equal(back.beta[L], pair.beta[L]), (n, L)


def test_even_embedding():
    rng = Random("bailey-embed")
    for ell in (0, 1, 2):
        pair = random_bailey_pair((1, 4 * ell), 3, rng)
        for n in (0, 1, 2):
            tri = even_embed(pair, n)
            assert tri.n == n
            assert tri.top == ell + 6
            assert trinomial_pair_defects(tri) == ()


def test_transforms_reject_wrong_base():
    rng = Random("bailey-reject")
    shifted = random_bailey_pair((1, 4), 3, rng)
    with pytest.raises(ValueError):
        to_trinomial(shifted, 0)
    negative = random_bailey_pair((-1, 4), 3, rng)
    with pytest.raises(ValueError):
        even_embed(negative, 0)
