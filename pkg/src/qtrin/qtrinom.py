"""q-trinomial coefficients in both normalizations and their L -> infinity
limits.

trinomial(L, b, a) is the round-bracket form

    sum_k q^(k(k+b)) [L, k] [L-k, k+a],

t_n(n, L, a) the T-form given by the explicit three-factor sum

    sum_r q^(r(r-n)/2) (q)_L / ((q)_x (q)_y (q)_r),

with x = (L-a-r)/2, y = (L+a-r)/2 and r running over 0 <= r <= L-|a| with
L-a-r even.  The multinomial is assembled as [L, x]*[L-x, y], so no
division is performed.  Half-integral powers of q appear whenever L-a is
odd; they live on the shared quarter-exponent grid.
"""

from __future__ import annotations

from .qcore import QPoly, QSeries, euler_product, qmono, qpoly_sum
from .qbinom import qbin


def trinomial(L: int, b: int, a: int) -> QPoly:
    """Round-bracket trinomial; zero for |a| > L, defined for any int b."""
    if L < 0:
        raise ValueError("L must be >= 0")
    return qpoly_sum(
        qmono(1, 4 * k * (k + b)) * qbin(L, k) * qbin(L - k, k + a)
        for k in range(L + 1)
    )


def t_n(n: int, L: int, a: int) -> QPoly:
    """T-form trinomial with superscript n; symmetric in a <-> -a."""
    if L < 0:
        raise ValueError("L must be >= 0")
    aa = abs(a)
    if aa > L:
        return QPoly.zero()
    parts = []
    for r in range((L - aa) % 2, L - aa + 1, 2):
        x = (L - a - r) // 2
        y = (L + a - r) // 2
        parts.append(
            qmono(1, 2 * r * (r - n)) * qbin(L, x) * qbin(L - x, y)
        )
    return qpoly_sum(parts)


def t0_limit(parity: str, order4: int) -> QSeries:
    """Limit of t_n(0, L, a) over L with L - a kept even ("even") or odd
    ("odd"):  ((-q^(1/2))_inf +/- (q^(1/2))_inf) / (2 (q)_inf).

    The numerator sum provably has even coefficients, so the halving is
    exact integer arithmetic.
    """
    plus = euler_product(-1, 2, 4, 1, order4)
    minus = euler_product(1, 2, 4, 1, order4)
    if parity == "even":
        num = plus + minus
    elif parity == "odd":
        num = plus - minus
    else:
        raise ValueError("parity must be 'even' or 'odd'")
    return num.div_exact(2) * euler_product(1, 4, 4, -1, order4)


def trinomial_limit(order4: int) -> QSeries:
    """Limit of trinomial(L, b, a) over L: the partition series 1/(q)_inf."""
    return euler_product(1, 4, 4, -1, order4)
