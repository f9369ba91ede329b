"""q-Pochhammer symbols, Gaussian binomial coefficients, and the classical
finite summation formulas used as two-sided checks.

Gaussian binomials are built bottom-up through the Pascal recurrence
qbin(L, a) = qbin(L-1, a-1) + q^a * qbin(L-1, a), never by division, so
every value is a certified polynomial by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qcore import QPoly, qmono, qpoly_sum


@dataclass(frozen=True)
class PochSpec:
    """Finite product prod_{j=0}^{length-1} (1 - sign*q^((base4 + j*step4)/4)).

    Covers (q)_n, (-1)_L, (rho)_L at rho = sign*q^(base4/4), and step-2
    symbols such as (-q; q^2)_n.
    """

    sign: int
    base4: int
    length: int
    step4: int = 4

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.length < 0:
            raise ValueError("length must be >= 0")
        if self.step4 <= 0:
            raise ValueError("step must be positive")

    def factors(self) -> list[tuple[int, int]]:
        return [
            (self.sign, self.base4 + j * self.step4) for j in range(self.length)
        ]


def poch_general(spec: PochSpec) -> QPoly:
    """Expand a PochSpec product into a polynomial."""
    p = QPoly.one()
    for sigma, e4 in spec.factors():
        p = p * (QPoly({0: 1, e4: -sigma}) if e4 else QPoly.const(1 - sigma))
    return p


_POCH: dict[int, QPoly] = {0: QPoly.one()}


def poch(n: int) -> QPoly:
    """(q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise ValueError("pochhammer length must be >= 0")
    got = _POCH.get(n)
    if got is None:
        for m in range(1, n + 1):
            if m not in _POCH:
                _POCH[m] = _POCH[m - 1] * QPoly({0: 1, 4 * m: -1})
        got = _POCH[n]
    return got


_QBIN: dict[tuple[int, int], QPoly] = {}


def qbin(n: int, a: int) -> QPoly:
    """Gaussian binomial [n, a]; zero outside 0 <= a <= n."""
    if a < 0 or n < 0 or a > n:
        return QPoly.zero()
    if a == 0 or a == n:
        return QPoly.one()
    got = _QBIN.get((n, a))
    if got is None:
        got = qbin(n - 1, a - 1) + qmono(1, 4 * a) * qbin(n - 1, a)
        _QBIN[(n, a)] = got
    return got


def _binom2(k: int) -> int:
    # k*(k-1)/2, valid for negative k as well
    return k * (k - 1) // 2


APPENDIX_IDENTITIES = ("qcv1", "qcv2", "qcv3", "qS")


def appendix_identity(
    name: str, L: int, a: int, b: int, c: int | None = None
) -> tuple[QPoly, QPoly]:
    """Both sides of one of the finite summation formulas.

    qcv1: sum_k q^(k(k+b)) [L,k][a,k+b]            = [a+L, b+L]
    qcv2: sum_k (-1)^k q^C(k,2) [L,k][L+a-k,b]     = q^(L(L+a-b)) [a, b-L]
    qcv3: sum_k (-1)^k q^(C(k,2)+k(b-L+1)) [L,k][L+a-k,b] = [a, b-L]
    qS:   sum_k q^((a-b-k)(L-k)) [L,k][a,k+b][k+c,a+L]
                                                   = [c, b+L][c-b, a-b]

    Returns (lhs, rhs) evaluated independently; b may be any integer.
    """
    if L < 0 or a < 0:
        raise ValueError("L and a must be >= 0")
    if name == "qS":
        if c is None:
            raise ValueError("qS needs the c parameter")
        if c < 0:
            raise ValueError("c must be >= 0")
        lhs = qpoly_sum(
            qmono(1, 4 * (a - b - k) * (L - k))
            * qbin(L, k)
            * qbin(a, k + b)
            * qbin(k + c, a + L)
            for k in range(L + 1)
        )
        rhs = qbin(c, b + L) * qbin(c - b, a - b)
        return lhs, rhs
    if c is not None:
        raise ValueError(f"{name} takes no c parameter")
    if name == "qcv1":
        lhs = qpoly_sum(
            qmono(1, 4 * k * (k + b)) * qbin(L, k) * qbin(a, k + b)
            for k in range(L + 1)
        )
        rhs = qbin(a + L, b + L)
        return lhs, rhs
    if name == "qcv2":
        lhs = qpoly_sum(
            qmono((-1) ** k, 4 * _binom2(k)) * qbin(L, k) * qbin(L + a - k, b)
            for k in range(L + 1)
        )
        rhs = qmono(1, 4 * L * (L + a - b)) * qbin(a, b - L)
        return lhs, rhs
    if name == "qcv3":
        lhs = qpoly_sum(
            qmono((-1) ** k, 4 * (_binom2(k) + k * (b - L + 1)))
            * qbin(L, k)
            * qbin(L + a - k, b)
            for k in range(L + 1)
        )
        rhs = qbin(a, b - L)
        return lhs, rhs
    raise ValueError(f"unknown identity {name!r}")
