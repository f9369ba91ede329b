"""Bailey-pair machinery for the binomial and trinomial kernels.

A binomial pair relative to a = sigma*q^(ell4/4) ties two finite sequences
through

    beta_L = sum_{r=0}^L alpha_r / ((q)_{L-r} (aq)_{L+r}),

a trinomial pair relative to n through B_L = sum_r T_n(L,r)/(q)_L * A_r.
Everything is carried as FactoredRatio so the classical summation lemmas
and the kernel-swapping transforms can be verified by exact cross
multiplication.  Sequences are tuples indexed 0..M; a and the rho slots of
the summation lemma use the same (sign, e4) encoding as denominator
factors, meaning sign*q^(e4/4).
"""

from dataclasses import dataclass
from random import Random

from .connect import t0_t1_bridge
from .qbinom import PochSpec, poch, poch_general
from .qcore import FactoredRatio, QPoly, qmono, ratio_equal, ratio_sum
from .qtrinom import t_n


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def _poch_factors(n: int) -> list[tuple[int, int]]:
    # (q)_n as denominator factors
    return [(1, 4 * j + 4) for j in range(n)]


def _shifted_factors(sign: int, base4: int, n: int) -> list[tuple[int, int]]:
    return [(sign, base4 + 4 * j) for j in range(n)]


@dataclass(frozen=True)
class BaileyPair:
    """Finite chunk of a binomial pair: alpha and beta run over 0..M."""

    a: tuple[int, int]
    alpha: tuple[FactoredRatio, ...]
    beta: tuple[FactoredRatio, ...]

    def __post_init__(self) -> None:
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")
        sign, _ = self.a
        if sign not in (1, -1):
            raise ValueError("sign of a must be +1 or -1")

    @property
    def top(self) -> int:
        return len(self.alpha) - 1


@dataclass(frozen=True)
class TrinomialBaileyPair:
    """Finite chunk of a trinomial pair relative to the integer n."""

    n: int
    a_seq: tuple[FactoredRatio, ...]
    b_seq: tuple[FactoredRatio, ...]

    def __post_init__(self) -> None:
        if len(self.a_seq) != len(self.b_seq):
            raise ValueError("A and B must have equal length")

    @property
    def top(self) -> int:
        return len(self.a_seq) - 1


def beta_from_alpha(
    a: tuple[int, int], alpha: tuple[FactoredRatio, ...]
) -> tuple[FactoredRatio, ...]:
    """Push alpha through the binomial kernel."""
    sign, ell4 = a
    out = []
    for bl in range(len(alpha)):
        out.append(
            ratio_sum(
                alpha[r].divided_by(
                    _poch_factors(bl - r)
                    + _shifted_factors(sign, ell4 + 4, bl + r)
                )
                for r in range(bl + 1)
            )
        )
    return tuple(out)


def b_from_a(n: int, a_seq: tuple[FactoredRatio, ...]) -> tuple[FactoredRatio, ...]:
    """Push A through the trinomial kernel."""
    out = []
    for bl in range(len(a_seq)):
        out.append(
            ratio_sum(
                (a_seq[r] * t_n(n, bl, r)).divided_by(_poch_factors(bl))
                for r in range(bl + 1)
            )
        )
    return tuple(out)


def binomial_pair_defects(pair: BaileyPair) -> tuple[int, ...]:
    """Indices where the defining relation fails; empty means valid."""
    want = beta_from_alpha(pair.a, pair.alpha)
    return tuple(
        bl for bl in range(pair.top + 1) if not ratio_equal(pair.beta[bl], want[bl])
    )


def trinomial_pair_defects(pair: TrinomialBaileyPair) -> tuple[int, ...]:
    want = b_from_a(pair.n, pair.a_seq)
    return tuple(
        bl
        for bl in range(pair.top + 1)
        if not ratio_equal(pair.b_seq[bl], want[bl])
    )


def unit_bailey_pair(a: tuple[int, int], m: int) -> BaileyPair:
    """alpha = (1, 0, 0, ...), for which beta_L = 1/((q)_L (aq)_L)."""
    sign, ell4 = a
    alpha = (FactoredRatio.one(),) + (FactoredRatio.zero(),) * m
    beta = tuple(
        FactoredRatio(
            QPoly.one(),
            _poch_factors(bl) + _shifted_factors(sign, ell4 + 4, bl),
        )
        for bl in range(m + 1)
    )
    return BaileyPair(a=a, alpha=alpha, beta=beta)


def random_bailey_pair(a: tuple[int, int], m: int, rng: Random) -> BaileyPair:
    """Random polynomial alpha with beta computed from it."""
    alpha = tuple(FactoredRatio.from_poly(_random_poly(rng)) for _ in range(m + 1))
    return BaileyPair(a=a, alpha=alpha, beta=beta_from_alpha(a, alpha))


def random_trinomial_pair(n: int, m: int, rng: Random) -> TrinomialBaileyPair:
    a_seq = tuple(FactoredRatio.from_poly(_random_poly(rng)) for _ in range(m + 1))
    return TrinomialBaileyPair(n=n, a_seq=a_seq, b_seq=b_from_a(n, a_seq))


def _random_poly(rng: Random) -> QPoly:
    terms: dict[int, int] = {}
    for _ in range(rng.randint(1, 3)):
        c = rng.randint(-3, 3)
        if c:
            e = 4 * rng.randint(0, 4)
            terms[e] = terms.get(e, 0) + c
    return QPoly(terms) if terms else QPoly.one()


# ---------------------------------------------------------------------------
# the summation lemmas


def bailey_lemma_sides(
    pair: BaileyPair, rho1: tuple[int, int], rho2: tuple[int, int]
) -> tuple[FactoredRatio, FactoredRatio]:
    """Both sides of the classical two-parameter summation.

    With c = aq/(rho1*rho2), the alpha side is

        sum_L (rho1)_L (rho2)_L c^L alpha_L
              / ((aq/rho1)_L (aq/rho2)_L (q)_{M-L} (aq)_{M+L})

    and the beta side is

        sum_L (rho1)_L (rho2)_L c^L (c)_{M-L} beta_L
              / ((aq/rho1)_M (aq/rho2)_M (q)_{M-L}).
    """
    sa, la4 = pair.a
    s1, e14 = rho1
    s2, e24 = rho2
    m = pair.top
    # aq/rho1, aq/rho2 and c = aq/(rho1 rho2), each as (sign, e4)
    q1 = (sa * s1, la4 + 4 - e14)
    q2 = (sa * s2, la4 + 4 - e24)
    c = (sa * s1 * s2, la4 + 4 - e14 - e24)
    lhs_parts = []
    rhs_parts = []
    for bl in range(m + 1):
        weight = (
            poch_general(PochSpec(s1, e14, bl))
            * poch_general(PochSpec(s2, e24, bl))
            * qmono(c[0] ** bl, bl * c[1])
        )
        lhs_parts.append(
            (pair.alpha[bl] * weight).divided_by(
                _shifted_factors(q1[0], q1[1], bl)
                + _shifted_factors(q2[0], q2[1], bl)
                + _poch_factors(m - bl)
                + _shifted_factors(sa, la4 + 4, m + bl)
            )
        )
        rhs_parts.append(
            (pair.beta[bl] * (weight * poch_general(PochSpec(c[0], c[1], m - bl))))
            .divided_by(
                _shifted_factors(q1[0], q1[1], m)
                + _shifted_factors(q2[0], q2[1], m)
                + _poch_factors(m - bl)
            )
        )
    return ratio_sum(lhs_parts), ratio_sum(rhs_parts)


# Named (a, rho1, rho2, M) slots exercising distinct sign and power patterns,
# including one rho below 1/q^4.
LEMMA_SPECIALIZATIONS: tuple[
    tuple[str, tuple[int, int], tuple[int, int], tuple[int, int], int], ...
] = (
    ("s1", (1, 0), (-1, 0), (-1, 2), 4),
    ("s2", (1, 4), (1, 4), (-1, 4), 5),
    ("s3", (1, 0), (1, -20), (-1, 2), 5),
    ("s4", (-1, 4), (-1, 0), (1, 4), 6),
)


def trinomial_lemma0_sides(
    pair: TrinomialBaileyPair,
) -> tuple[FactoredRatio, FactoredRatio]:
    """Both sides of the n = 0 summation

        sum_L (-1)_L q^(L/2) B_L
            = (-1)_{M+1} sum_L q^(L/2) A_L T_1(M,L) / ((1+q^L)(q)_M).
    """
    if pair.n != 0:
        raise ValueError("needs a pair relative to 0")
    m = pair.top
    lhs = ratio_sum(
        pair.b_seq[bl] * (poch_general(PochSpec(-1, 0, bl)) * qmono(1, 2 * bl))
        for bl in range(m + 1)
    )
    front = poch_general(PochSpec(-1, 0, m + 1))
    rhs = ratio_sum(
        (pair.a_seq[bl] * (front * qmono(1, 2 * bl) * t_n(1, m, bl))).divided_by(
            _poch_factors(m) + [(-1, 4 * bl)]
        )
        for bl in range(m + 1)
    )
    return lhs, rhs


def trinomial_lemma1_sides(
    pair: TrinomialBaileyPair,
) -> tuple[FactoredRatio, FactoredRatio]:
    """Both sides of the n = 1 summation

        sum_L (-1/q)_L q^L B_L = (-1)_M sum_L A_L ( T_1(M,L)/(q)_M
            - T_1(M-1,L+1) / ((1+q^(-L-1))(q)_{M-1})
            - T_1(M-1,L-1) / ((1+q^(L-1))(q)_{M-1}) ).
    """
    if pair.n != 1:
        raise ValueError("needs a pair relative to 1")
    m = pair.top
    if m < 1:
        raise ValueError("needs M >= 1")
    lhs = ratio_sum(
        pair.b_seq[bl] * (poch_general(PochSpec(-1, -4, bl)) * qmono(1, 4 * bl))
        for bl in range(m + 1)
    )
    front = poch_general(PochSpec(-1, 0, m))
    parts = []
    for bl in range(m + 1):
        inner = FactoredRatio(t_n(1, m, bl), _poch_factors(m))
        inner = inner - FactoredRatio(
            t_n(1, m - 1, bl + 1), _poch_factors(m - 1) + [(-1, -4 * bl - 4)]
        )
        inner = inner - FactoredRatio(
            t_n(1, m - 1, bl - 1), _poch_factors(m - 1) + [(-1, 4 * bl - 4)]
        )
        parts.append(pair.a_seq[bl] * front * inner)
    return lhs, ratio_sum(parts)


def telescoped_column_sides(a: int, m: int) -> tuple[FactoredRatio, FactoredRatio]:
    """Summing the T_0/T_1 bridge against (-1)_L q^(L/2) / (q)_L telescopes:

        sum_{L=a}^M q^(L/2) (-1)_L T_0(L,a)/(q)_L
            = q^(a/2) (-1)_{M+1} T_1(M,a) / ((1+q^a)(q)_M).
    """
    if not 0 <= a <= m:
        raise ValueError("needs 0 <= a <= M")
    lhs = ratio_sum(
        FactoredRatio(
            poch_general(PochSpec(-1, 0, bl)) * qmono(1, 2 * bl) * t_n(0, bl, a),
            _poch_factors(bl),
        )
        for bl in range(a, m + 1)
    )
    rhs = FactoredRatio(
        qmono(1, 2 * a) * poch_general(PochSpec(-1, 0, m + 1)) * t_n(1, m, a),
        _poch_factors(m) + [(-1, 4 * a)],
    )
    return lhs, rhs


def bridge_sides(bl: int, a: int) -> tuple[QPoly, QPoly]:
    """The cleared T_0/T_1 bridge the telescoping rests on."""
    return t0_t1_bridge(bl, a)


# ---------------------------------------------------------------------------
# kernel-swapping transforms


def to_trinomial(pair: BaileyPair, n: int) -> TrinomialBaileyPair:
    """Turn a binomial pair relative to 1 into a trinomial pair.

    For n = 0:  A_L = q^(-L^2/2) alpha_L,
                B_L = sum_k (-1)^(L-k) q^(C(L-k,2) - L^2/2)
                      (q)_{2k} / ((q)_k (q)_{L-k}) beta_k.
    For n = 1 the Gaussian weight is q^(-C(L,2))/(1+q^L) and the B sum
    carries an extra 1/(1+q^k).
    """
    if pair.a != (1, 0):
        raise ValueError("input pair must be relative to 1")
    if n not in (0, 1):
        raise ValueError("n must be 0 or 1")
    a_seq = []
    b_seq = []
    for bl in range(pair.top + 1):
        if n == 0:
            a_seq.append(pair.alpha[bl] * qmono(1, -2 * bl * bl))
        else:
            a_seq.append(
                (pair.alpha[bl] * qmono(1, -4 * _binom2(bl))).divided_by(
                    [(-1, 4 * bl)]
                )
            )
        parts = []
        for k in range(bl + 1):
            if n == 0:
                shift = 4 * _binom2(bl - k) - 2 * bl * bl
            else:
                shift = 4 * (_binom2(bl - k) - _binom2(bl))
            term = (
                pair.beta[k]
                * (qmono((-1) ** ((bl - k) & 1), shift) * poch(2 * k))
            ).divided_by(_poch_factors(k) + _poch_factors(bl - k))
            if n == 1:
                term = term.divided_by([(-1, 4 * k)])
            parts.append(term)
        b_seq.append(ratio_sum(parts))
    return TrinomialBaileyPair(n=n, a_seq=tuple(a_seq), b_seq=tuple(b_seq))


def to_binomial(pair: TrinomialBaileyPair) -> BaileyPair:
    """Inverse direction; the result is always relative to 1.

    For n = 0:  alpha_L = q^(L^2/2) A_L,
                beta_L = (q)_L/(q)_{2L} sum_k q^(k^2/2)/(q)_{L-k} B_k,
    and for n = 1 with weight q^(C(L,2))(1+q^L) and q^(C(k,2)) inside.
    """
    if pair.n not in (0, 1):
        raise ValueError("pair must be relative to 0 or 1")
    alpha = []
    beta = []
    for bl in range(pair.top + 1):
        if pair.n == 0:
            alpha.append(pair.a_seq[bl] * qmono(1, 2 * bl * bl))
            inner = ratio_sum(
                (pair.b_seq[k] * qmono(1, 2 * k * k)).divided_by(
                    _poch_factors(bl - k)
                )
                for k in range(bl + 1)
            )
            scale = poch(bl)
        else:
            alpha.append(
                pair.a_seq[bl]
                * (qmono(1, 4 * _binom2(bl)) * poch_general(PochSpec(-1, 4 * bl, 1)))
            )
            inner = ratio_sum(
                (pair.b_seq[k] * qmono(1, 4 * _binom2(k))).divided_by(
                    _poch_factors(bl - k)
                )
                for k in range(bl + 1)
            )
            scale = poch(bl) * poch_general(PochSpec(-1, 4 * bl, 1))
        beta.append((inner * scale).divided_by(_poch_factors(2 * bl)))
    return BaileyPair(a=(1, 0), alpha=tuple(alpha), beta=tuple(beta))


def even_embed(pair: BaileyPair, n: int) -> TrinomialBaileyPair:
    """Spread a pair relative to q^ell over even steps of a trinomial pair:

        A_L = alpha_{(L-ell)/2}   at L = ell, ell+2, ...
        B_L = sum_k q^((L-ell-2k)(L-ell-2k-n)/2)
              / ((q)_ell (q)_{L-ell-2k}) beta_k.

    Valid for any integer n; the output has top index ell + 2M.
    """
    sign, ell4 = pair.a
    if sign != 1 or ell4 < 0 or ell4 % 4:
        raise ValueError("input pair must be relative to a power q^ell")
    ell = ell4 // 4
    m_out = ell + 2 * pair.top
    a_seq = []
    b_seq = []
    for bl in range(m_out + 1):
        if bl < ell:
            a_seq.append(FactoredRatio.zero())
            b_seq.append(FactoredRatio.zero())
            continue
        a_seq.append(
            pair.alpha[(bl - ell) // 2] if (bl - ell) % 2 == 0 else FactoredRatio.zero()
        )
        b_seq.append(
            ratio_sum(
                (
                    pair.beta[k]
                    * qmono(1, 2 * (bl - ell - 2 * k) * (bl - ell - 2 * k - n))
                ).divided_by(_poch_factors(ell) + _poch_factors(bl - ell - 2 * k))
                for k in range((bl - ell) // 2 + 1)
            )
        )
    return TrinomialBaileyPair(n=n, a_seq=tuple(a_seq), b_seq=tuple(b_seq))
