"""Continued-fraction data, lattice sums, and the two polynomial character
forms that must agree on every minimal-model pair."""

import pytest

from qtrin.qbinom import qbin
from qtrin.qcore import QPoly, SelfCheckError, qmono, qpoly_sum, truncate
from qtrin.virasoro import (
    FermionicSpec,
    bosonic,
    character,
    continued_fraction,
    fermionic,
    incidence,
    lattice_sum,
    rs_pair,
)

# vacuum and first-excited characters of the (3,4) pair, and both characters
# of the (2,5) pair, all normalized to constant term 1; the (2,5) rows count
# partitions into parts = 2,3 (mod 5) and parts = 1,4 (mod 5) respectively
CHI_34_11 = [1, 0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 8, 11, 12, 16, 18, 23]
CHI_34_12 = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32]
CHI_25_11 = [1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 6, 8, 9, 11, 12, 15, 16, 20]
CHI_25_12 = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 14, 17, 19, 23, 26, 31]


def euclid_quotients(num: int, den: int) -> list[int]:
    out = []
    while den:
        out.append(num // den)
        num, den = den, num % den
    return out


@pytest.mark.parametrize(
    "p,pp", [(4, 5), (5, 7), (5, 8), (7, 9), (7, 10), (7, 12), (8, 13), (11, 13)]
)
def test_continued_fraction_matches_euclid(p, pp):
    cf = continued_fraction(p, pp)
    quots = euclid_quotients(p, pp - p)
    assert cf.nu == tuple(quots[:-1]) + (quots[-1] - 2,)
    assert cf.d == sum(cf.nu)
    acc, t = 0, []
    for v in cf.nu[:-1]:
        acc += v
        t.append(acc)
    assert cf.t == tuple(t)
    assert incidence(cf).dim == cf.d


def test_continued_fraction_rejects_bad_pairs():
    with pytest.raises(ValueError):
        continued_fraction(3, 14)  # outside p < pp < 2p
    with pytest.raises(ValueError):
        continued_fraction(4, 6)  # not coprime


def test_incidence_frozen_instances():
    tadpole = incidence(continued_fraction(5, 7))
    assert tadpole.inc == ((0, 1), (1, 1))
    assert tadpole.cartan2 == ((2, -1), (-1, 1))
    # (7,10) has a junction at node 2, visible as the signed middle row
    junction = incidence(continued_fraction(7, 10))
    assert junction.inc == ((0, 1, 0), (1, 1, -1), (0, 1, 0))


def test_rs_pair_against_brute_force():
    for p, pp in ((3, 4), (5, 7), (7, 10), (5, 8), (7, 12), (2, 7)):
        sols = sorted(
            (r, s)
            for r in range(1, p)
            for s in range(1, pp)
            if abs(pp * r - p * s) == 1
        )
        assert rs_pair(p, pp) == (sols[0], sols[1])


def test_lattice_sum_matches_naive_dim1():
    spec = FermionicSpec(
        dim=1, quad=((4,),), quad_div=1, top_l=(2,), top_mat=((0,),)
    )
    for L in range(9):
        naive = qpoly_sum(
            qmono(1, 4 * m * m) * qbin(L, m) for m in range(L + 1)
        )
        assert lattice_sum(spec, L) == naive


def test_lattice_sum_parity_constraint():
    spec = FermionicSpec(
        dim=1,
        quad=((4,),),
        quad_div=1,
        top_l=(2,),
        top_mat=((0,),),
        parity=(((1,), 1),),
    )
    for L in range(9):
        naive = qpoly_sum(
            qmono(1, 4 * m * m) * qbin(L, m)
            for m in range(L + 1)
            if (m + L) % 2 == 0
        )
        assert lattice_sum(spec, L) == naive


def test_lattice_sum_flags_half_integral_exponent():
    bad = FermionicSpec(
        dim=1, quad=((1,),), quad_div=2, top_l=(2,), top_mat=((0,),)
    )
    with pytest.raises(SelfCheckError):
        lattice_sum(bad, 2)


def test_character_forms_agree():
    # direct pairs and one pair that routes through duality
    for p, pp in ((3, 4), (4, 5), (5, 7), (7, 10), (2, 7)):
        for L in range(8):
            assert fermionic(p, pp, L) == bosonic(p, pp, L), (p, pp, L)


def test_degenerate_length():
    assert fermionic(3, 4, 0) == QPoly.one()
    assert bosonic(5, 7, 0) == QPoly.one()


def test_character_series_frozen():
    def dense(s):
        return [s.coeff(4 * n) for n in range(s.order4 // 4 + 1)]

    assert dense(character(3, 4, 1, 1, 64)) == CHI_34_11
    assert dense(character(3, 4, 1, 2, 64)) == CHI_34_12
    assert dense(character(2, 5, 1, 1, 80)) == CHI_25_11
    assert dense(character(2, 5, 1, 2, 80)) == CHI_25_12
    # the trivial pair has a single state at every level
    assert character(2, 3, 1, 1, 60).sorted_items() == [(0, 1)]


def test_character_label_reflection():
    assert character(3, 4, 1, 1, 40) == character(3, 4, 2, 3, 40)
    assert character(5, 7, 2, 3, 40) == character(5, 7, 3, 4, 40)


def test_polynomials_converge_to_characters():
    # the two finite forms at the saved (r, s) labels approach the character
    # of the lexicographically smaller solution as L grows
    for p, pp in ((3, 4), (5, 7)):
        r, s = rs_pair(p, pp)[0]
        order4 = 24
        want = character(p, pp, r, s, order4)
        assert truncate(bosonic(p, pp, 14), order4) == want
