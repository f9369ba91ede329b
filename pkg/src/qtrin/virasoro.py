"""Continued fractions, incidence matrices, fermionic lattice sums, bosonic
polynomials, and truncated Virasoro characters.

For coprime p < p' < 2p the continued fraction of p/(p'-p) is written
[nu_0, ..., nu_{n-1}, nu_n + 2]; d = nu_0 + ... + nu_n nodes carry an
incidence matrix I whose rows are nearest-neighbour except at the partial
sums t_m = nu_0 + ... + nu_{m-1}, where a tadpole-like correction enters,
and at row d, which keeps a diagonal term exactly when nu_n = 0.  The
doubled Cartan-type matrix 2B = 2*Id - I stays integral, so quadratic
exponents m.B.m/2 are handled as m.(2B).m in quarter units.

lattice_sum enumerates constrained nonnegative integer vectors by DFS with
row-wise pruning.  Every call runs twice, the second time with a widened
per-coordinate cap; a mismatch raises SelfCheckError.  That keeps the cap
heuristic honest without trusting it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .qcore import QPoly, QSeries, SelfCheckError, euler_product, qmono, qpoly_sum
from .qbinom import qbin


@dataclass(frozen=True)
class CFData:
    p: int
    pp: int
    nu: tuple[int, ...]
    t: tuple[int, ...]
    d: int


def continued_fraction(p: int, pp: int) -> CFData:
    """Continued fraction data for the coprime pair p < pp < 2p."""
    if not (0 < p < pp < 2 * p):
        raise ValueError(f"need p < pp < 2p, got ({p}, {pp})")
    if gcd(p, pp) != 1:
        raise ValueError(f"({p}, {pp}) must be coprime")
    num, den = p, pp - p
    quots = []
    while den:
        quots.append(num // den)
        num, den = den, num % den
    # Euclid always ends with a last quotient >= 2 here (the pair is coprime
    # and p/(pp-p) > 1), which the nu-convention absorbs as nu_n = last - 2.
    if quots[-1] < 2:
        raise AssertionError("continued fraction ended below 2")
    nu = tuple(quots[:-1]) + (quots[-1] - 2,)
    t = []
    acc = 0
    for v in nu[:-1]:
        acc += v
        t.append(acc)
    cf = CFData(p=p, pp=pp, nu=nu, t=tuple(t), d=sum(nu))
    # reconstruction check: fold [nu_0, ..., nu_{n-1}, nu_n + 2] back
    frac = Fraction(nu[-1] + 2)
    for v in reversed(nu[:-1]):
        frac = v + 1 / frac
    if frac != Fraction(p, pp - p):
        raise AssertionError("continued fraction failed to reconstruct")
    return cf


@dataclass(frozen=True)
class IncMatrix:
    """Incidence matrix I (d x d) and the doubled form 2B = 2*Id - I."""

    inc: tuple[tuple[int, ...], ...]
    cartan2: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.inc)


def incidence(cf: CFData) -> IncMatrix:
    d = cf.d
    if d < 1:
        raise ValueError("incidence needs d >= 1")
    n = len(cf.nu) - 1
    last_zero = cf.nu[-1] == 0
    special = set(cf.t[: n - 1] if last_zero else cf.t[:n])
    rows = []
    for i in range(1, d + 1):
        row = [0] * d
        if i == d:
            if d >= 2:
                row[d - 2] = 1
            if last_zero:
                row[d - 1] += 1
        elif i in special:
            if i >= 2:
                row[i - 2] += 1  # j = i-1
            row[i - 1] += 1      # j = i
            row[i] -= 1          # j = i+1
        else:
            if i >= 2:
                row[i - 2] = 1
            row[i] = 1
        rows.append(tuple(row))
    inc = tuple(rows)
    cartan2 = tuple(
        tuple((2 if i == j else 0) - inc[i][j] for j in range(d)) for i in range(d)
    )
    return IncMatrix(inc=inc, cartan2=cartan2)


def rs_pair(p: int, pp: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two solutions of |pp*r - p*s| = 1 with 1 <= r < p, 1 <= s < pp,
    lexicographically smaller first."""
    if pp <= p or p < 2:
        raise ValueError("need 2 <= p < pp")
    if gcd(p, pp) != 1:
        raise ValueError(f"({p}, {pp}) must be coprime")
    r1 = pow(pp, -1, p)
    s1 = (pp * r1 - 1) // p
    sols = sorted(((r1, s1), (p - r1, pp - s1)))
    return sols[0], sols[1]


# ---------------------------------------------------------------------------
# lattice sums


@dataclass(frozen=True)
class FermionicSpec:
    """Declarative description of a constrained lattice sum.

    For each admissible nonnegative integer vector m the contribution is

        q^(E(m)/4) * prod_j qbin(top_j, m_j)

    with E(m) = m.quad.m // quad_div + L * (lin_l . m) + const_l2 * L^2 in
    quarter units and top_j = (top_l[j]*L + (top_mat . m)_j) / 2, which must
    be integral for every admissible m.  parity lists groups
    (coords, l_coeff) constraining sum(m[coords]) + l_coeff*L to be even;
    coords are 1-based.
    """

    dim: int
    quad: tuple[tuple[int, ...], ...]
    quad_div: int
    top_l: tuple[int, ...]
    top_mat: tuple[tuple[int, ...], ...]
    parity: tuple[tuple[tuple[int, ...], int], ...] = ()
    lin_l: tuple[int, ...] = ()
    const_l2: int = 0

    def __post_init__(self) -> None:
        d = self.dim
        if d < 0:
            raise ValueError("dimension must be >= 0")
        for mat, name in ((self.quad, "quad"), (self.top_mat, "top_mat")):
            if len(mat) != d or any(len(r) != d for r in mat):
                raise ValueError(f"{name} must be {d}x{d}")
        if len(self.top_l) != d:
            raise ValueError("top_l must have one entry per coordinate")
        if self.lin_l and len(self.lin_l) != d:
            raise ValueError("lin_l must have one entry per coordinate")
        if self.quad_div not in (1, 2):
            raise ValueError("quad_div must be 1 or 2")
        for coords, _ in self.parity:
            if any(not 1 <= j <= d for j in coords):
                raise ValueError("parity coordinates out of range")


def _lattice_sum_capped(spec: FermionicSpec, L: int, cap: int) -> QPoly:
    d = spec.dim
    if d == 0:
        if any((lc * L) % 2 for _, lc in spec.parity):
            return QPoly.zero()
        return qmono(1, spec.const_l2 * L * L)

    T = spec.top_mat
    # row i fully known once the last coordinate it references is fixed
    last_col = []
    for i in range(d):
        nz = [j for j in range(d) if T[i][j]]
        last_col.append(max(nz + [i]))
    checks_at = [[] for _ in range(d)]
    for i in range(d):
        checks_at[last_col[i]].append(i)
    pos_tail = [
        [sum(v for v in T[i][j + 1 :] if v > 0) for j in range(d + 1)]
        for i in range(d)
    ]
    # parity anchored at the largest coordinate of each group
    forced = [None] * d
    anchor_parity: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(d)]
    for coords, lc in spec.parity:
        anchor_parity[max(coords) - 1].append((coords, lc))

    lin_l = spec.lin_l or (0,) * d
    acc: dict[int, int] = {}
    m = [0] * d

    def descend(j: int, partial: QPoly) -> None:
        row = T[j]
        fixed = spec.top_l[j] * L + sum(row[k] * m[k] for k in range(j))
        # optimistic bound: remaining coordinates contribute at most their
        # positive entries at the cap
        denom = 2 - row[j]
        ub = min(cap, (fixed + pos_tail[j][j] * cap) // denom) if denom > 0 else cap
        if ub < 0:
            return
        start, step = 0, 1
        for coords, lc in anchor_parity[j]:
            want = (sum(m[k - 1] for k in coords if k - 1 != j) + lc * L) % 2
            if step == 2 and start != want:
                return
            start, step = want, 2
        for v in range(start, ub + 1, step):
            m[j] = v
            prod = partial
            ok = True
            for i in checks_at[j]:
                top2 = spec.top_l[i] * L + sum(T[i][k] * m[k] for k in range(j + 1))
                if top2 % 2:
                    raise SelfCheckError(
                        "binomial top argument became half-integral; the "
                        "FermionicSpec parity constraints are inconsistent"
                    )
                top = top2 // 2
                if m[i] > top or top < 0:
                    ok = False
                    break
                if m[i]:
                    b = qbin(top, m[i])
                    if b.is_zero():
                        ok = False
                        break
                    prod = prod * b
            if not ok:
                continue
            if j + 1 < d:
                descend(j + 1, prod)
            else:
                e4 = sum(
                    m[i] * sum(spec.quad[i][k] * m[k] for k in range(d))
                    for i in range(d)
                )
                if spec.quad_div == 2:
                    if e4 % 2:
                        raise SelfCheckError(
                            "quadratic exponent not integral in quarter units"
                        )
                    e4 //= 2
                e4 += L * sum(lin_l[k] * m[k] for k in range(d))
                e4 += spec.const_l2 * L * L
                for e, c in prod.items():
                    v = acc.get(e + e4, 0) + c
                    if v:
                        acc[e + e4] = v
                    else:
                        del acc[e + e4]
        m[j] = 0

    descend(0, QPoly.one())
    return QPoly(acc)


def lattice_sum(spec: FermionicSpec, L: int, cap: int | None = None) -> QPoly:
    """Evaluate the lattice sum at L, re-running with a widened cap as a
    self-check; disagreement raises SelfCheckError."""
    if L < 0:
        raise ValueError("L must be >= 0")
    base = cap if cap is not None else 2 * L + 2 * spec.dim
    first = _lattice_sum_capped(spec, L, base)
    second = _lattice_sum_capped(spec, L, base + 4)
    if first != second:
        raise SelfCheckError(
            f"lattice sum changed when the cap was widened from {base}"
        )
    return first


def _all_even_parity(d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple(((j,), 0) for j in range(1, d + 1))


def fermionic(p: int, pp: int, L: int) -> QPoly:
    """Fermionic polynomial for the coprime pair (p, pp), pp != 2p.

    Defined by the lattice sum for p < pp < 2p; for pp > 2p by the duality
    F(p, pp; q) = q^(L^2) * dual(F(pp-p, pp; q)), which lands in the direct
    regime after one step.
    """
    if L < 0:
        raise ValueError("L must be >= 0")
    if gcd(p, pp) != 1 or not 0 < p < pp or pp == 2 * p:
        raise ValueError(f"({p}, {pp}) must be coprime with p < pp, pp != 2p")
    if pp > 2 * p:
        return qmono(1, 4 * L * L) * fermionic(pp - p, pp, L).dual()
    cf = continued_fraction(p, pp)
    if cf.d == 0:
        return QPoly.one()
    mat = incidence(cf)
    d = cf.d
    top_l = (2,) + (0,) * (d - 1)
    spec = FermionicSpec(
        dim=d,
        quad=mat.cartan2,
        quad_div=1,
        top_l=top_l,
        top_mat=mat.inc,
        parity=_all_even_parity(d),
    )
    return lattice_sum(spec, L)


def bosonic(
    p: int, pp: int, L: int, rs: tuple[int, int] | None = None
) -> QPoly:
    """Bosonic polynomial: the finite j-sum of 2L-binomials for (p, pp).

    rs defaults to the lexicographically smaller solution of |pp*r - p*s|=1;
    either solution gives the same polynomial.
    """
    if L < 0:
        raise ValueError("L must be >= 0")
    if rs is None:
        rs = rs_pair(p, pp)[0]
    r, s = rs
    parts = []
    jmax = L // pp + 2
    for j in range(-jmax, jmax + 1):
        parts.append(
            qmono(1, 4 * j * (p * pp * j + 1)) * qbin(2 * L, L - pp * j)
        )
        parts.append(
            -qmono(1, 4 * (p * j + r) * (pp * j + s)) * qbin(2 * L, L - pp * j - s)
        )
    return qpoly_sum(parts)


def _character_numerator(
    p: int, pp: int, r: int, s: int, order4: int, jmax: int
) -> QSeries:
    terms: dict[int, int] = {}
    for j in range(-jmax, jmax + 1):
        e = 4 * j * (p * pp * j + pp * r - p * s)
        if e <= order4:
            terms[e] = terms.get(e, 0) + 1
        e = 4 * (p * j + r) * (pp * j + s)
        if e <= order4:
            terms[e] = terms.get(e, 0) - 1
    return QSeries(terms, order4)


def character(p: int, pp: int, r: int, s: int, order4: int) -> QSeries:
    """Normalized character series: the theta-difference numerator divided
    by (q)_inf, truncated at order4 quarter units."""
    if gcd(p, pp) != 1 or not 1 < p < pp:
        raise ValueError(f"({p}, {pp}) must be coprime with 1 < p < pp")
    if not (0 < r < p and 0 < s < pp):
        raise ValueError("need 0 < r < p and 0 < s < pp")
    if order4 < 0:
        raise ValueError("order must be >= 0")
    jmax = 3 + isqrt(order4 // (4 * p * pp) + 1)
    num = _character_numerator(p, pp, r, s, order4, jmax)
    if num != _character_numerator(p, pp, r, s, order4, jmax + 2):
        raise SelfCheckError("character j-range was too narrow")
    return num * euler_product(1, 4, 4, -1, order4)
