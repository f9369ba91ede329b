"""Connection coefficients between Gaussian binomials and T-form trinomials:
the four weight families, the expansions in both directions, their
orthogonality, the even-argument expansions, and the polynomial bridge
between T_0 and T_1.

Two of the families carry a (1+q^a)/(1+q^k) type factor, so single weights
are FactoredRatio values.  Identity checks accumulate the full sum over a
common denominator and then clear it by exact division; a division failure
is a formula bug, never tolerated as data.
"""

from __future__ import annotations

from .qcore import FactoredRatio, QPoly, one_minus_q, one_plus_q, qmono, ratio_sum
from .qbinom import qbin
from .qtrinom import t_n

COEFF_KINDS = ("C", "Cp", "D", "Dp")


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def connection_coeff(kind: str, L: int, k: int, a: int) -> FactoredRatio:
    """Single connection weight; kind is one of C, Cp, D, Dp.

    C / Cp expand T_0-type objects, D / Dp the T_1 family.  k must lie in
    0..L; a is any integer.
    """
    if not 0 <= k <= L:
        raise ValueError(f"k = {k} out of range 0..{L}")
    sign = (-1) ** (L - k)
    if kind == "C":
        num = qmono(sign, 4 * _binom2(L - k) + 2 * (a * a - L * L)) * qbin(L, k)
        return FactoredRatio(num)
    if kind == "Cp":
        return FactoredRatio(qmono(1, 2 * (k * k - a * a)) * qbin(L, k))
    if kind == "D":
        e4 = 4 * (_binom2(L - k) + _binom2(a) - _binom2(L))
        num = qmono(sign, e4) * one_plus_q(4 * a) * qbin(L, k)
        return FactoredRatio(num, [(-1, 4 * k)])
    if kind == "Dp":
        e4 = 4 * (_binom2(k) - _binom2(a))
        num = qmono(1, e4) * one_plus_q(4 * L) * qbin(L, k)
        return FactoredRatio(num, [(-1, 4 * a)])
    raise ValueError(f"unknown coefficient kind {kind!r}")


def expand_trinomial_in_binomials(kind: str, L: int, a: int) -> QPoly:
    """sum_k W_{L,k}(a) [2k, k-a] with W = C for kind "T0", D for "T1".

    Equals t_n(0, L, a) resp. t_n(1, L, a); returned as the cleared
    polynomial so the caller compares plain polynomials.
    """
    if abs(a) > L:
        raise ValueError("need |a| <= L")
    fam = {"T0": "C", "T1": "D"}.get(kind)
    if fam is None:
        raise ValueError(f"kind must be T0 or T1, got {kind!r}")
    total = ratio_sum(
        connection_coeff(fam, L, k, a) * qbin(2 * k, k - a) for k in range(L + 1)
    )
    return total.clear_denominator()


def expand_binomial_in_trinomials(kind: str, L: int, a: int) -> QPoly:
    """sum_k W'_{L,k}(a) T_j(k, a) with (W', j) = (Cp, 0) for kind "T0" and
    (Dp, 1) for kind "T1"; equals [2L, L-a]."""
    if abs(a) > L:
        raise ValueError("need |a| <= L")
    if kind == "T0":
        fam, n = "Cp", 0
    elif kind == "T1":
        fam, n = "Dp", 1
    else:
        raise ValueError(f"kind must be T0 or T1, got {kind!r}")
    total = ratio_sum(
        connection_coeff(fam, L, k, a) * t_n(n, k, a) for k in range(L + 1)
    )
    return total.clear_denominator()


def orthogonality_check(family: str, L: int, M: int, a: int) -> QPoly:
    """sum_k W_{L,k}(a) W'_{k,M}(a), cleared; equals 1 if L == M else 0."""
    if not 0 <= M <= L:
        raise ValueError("need 0 <= M <= L")
    if family == "C":
        f1, f2 = "C", "Cp"
    elif family == "D":
        f1, f2 = "D", "Dp"
    else:
        raise ValueError(f"family must be C or D, got {family!r}")
    total = ratio_sum(
        connection_coeff(f1, L, k, a) * connection_coeff(f2, k, M, a)
        for k in range(M, L + 1)
    )
    return total.clear_denominator()


def t_even_expansion(n: int, L: int, a: int) -> QPoly:
    """sum_k q^((L-2k)(L-2k-n)/2) [L, 2k] [2k, k-a]; equals t_n(n, L, 2a)."""
    if L < 0:
        raise ValueError("L must be >= 0")
    parts = []
    for k in range(L // 2 + 1):
        parts.append(
            qmono(1, 2 * (L - 2 * k) * (L - 2 * k - n))
            * qbin(L, 2 * k)
            * qbin(2 * k, k - a)
        )
    total = QPoly.zero()
    for p in parts:
        total = total + p
    return total


def trinomial_even_expansion(L: int, b: int, a: int) -> QPoly:
    """sum_k q^((k-a)(k-a+b)) [L, 2k] [2k, k-a]; equals trinomial(L, b, 2a)."""
    if L < 0:
        raise ValueError("L must be >= 0")
    total = QPoly.zero()
    for k in range(L // 2 + 1):
        total = total + (
            qmono(1, 4 * (k - a) * (k - a + b))
            * qbin(L, 2 * k)
            * qbin(2 * k, k - a)
        )
    return total


def even_arg_expansion(kind: str, *params: int) -> QPoly:
    """Dispatcher: kind "Tn" takes (n, L, a), kind "trinomial" (L, b, a)."""
    if kind == "Tn":
        return t_even_expansion(*params)
    if kind == "trinomial":
        return trinomial_even_expansion(*params)
    raise ValueError(f"kind must be Tn or trinomial, got {kind!r}")


def t0_t1_bridge(L: int, a: int) -> tuple[QPoly, QPoly]:
    """Both sides of the cleared T_0/T_1 bridge

        (1+q^a) T_0(L,a) = q^((a-L)/2) ((1+q^L) T_1(L,a) - (1-q^L) T_1(L-1,a))

    for L >= 1."""
    if L < 1:
        raise ValueError("the bridge needs L >= 1")
    lhs = one_plus_q(4 * a) * t_n(0, L, a)
    rhs = qmono(1, 2 * (a - L)) * (
        one_plus_q(4 * L) * t_n(1, L, a) - one_minus_q(4 * L) * t_n(1, L - 1, a)
    )
    return lhs, rhs


def rederive_binomial_expansion(L: int, a: int) -> tuple[QPoly, QPoly]:
    """Recover (1+q^a) [2L, L-a] by pushing the bridge through the Dp
    expansion: both sides of

        sum_k q^(C(k,2)-C(a,2)) [L,k] ((1+q^k) T_1(k,a) - (1-q^k) T_1(k-1,a))
            = (1+q^a) [2L, L-a].

    The k = 0 term contributes only through (1+q^0) T_1(0,a).
    """
    if abs(a) > L:
        raise ValueError("need |a| <= L")
    acc = QPoly.zero()
    for k in range(L + 1):
        w = qmono(1, 4 * (_binom2(k) - _binom2(a))) * qbin(L, k)
        inner = one_plus_q(4 * k) * t_n(1, k, a)
        if k >= 1:
            inner = inner - one_minus_q(4 * k) * t_n(1, k - 1, a)
        acc = acc + w * inner
    return acc, one_plus_q(4 * a) * qbin(2 * L, L - a)
