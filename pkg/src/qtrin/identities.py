"""Named polynomial and series identities, each side computed by its own
independent path.

Covers the finite Rogers-Ramanujan identity in binomial and round-trinomial
form, the Goellnitz-Gordon series/product identity with its theta-product
step, a pair of double-sum identities tied to partitions with mixed
difference conditions, five families of lattice-sum versus theta-like-sum
polynomial identities indexed by coprime moduli or by a path-graph rank,
and the infinite-size character limit of the rank-indexed family.

Conventions here are the quarter-unit exponents of qcore.  Lattice sides go
through virasoro.lattice_sum; theta-like sides are assembled directly from
binomials and trinomials.  Nothing in this module derives one side of an
identity from the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .qcore import (
    QPoly,
    QSeries,
    SelfCheckError,
    euler_product,
    inverse_pochhammer_series,
    qmono,
    qpoly_sum,
    truncate,
)
from .qbinom import PochSpec, poch_general, qbin
from .qtrinom import t_n, trinomial
from .virasoro import (
    FermionicSpec,
    bosonic,
    character,
    continued_fraction,
    fermionic,
    incidence,
    lattice_sum,
    rs_pair,
)


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


# ---------------------------------------------------------------------------
# Rogers-Ramanujan, finite form


def rr_lhs(L: int) -> QPoly:
    """sum_n q^(n^2) [L-n, n]: partitions with parts differing by at least
    two, largest part below L."""
    if L < 0:
        raise ValueError("L must be >= 0")
    return qpoly_sum(
        qmono(1, 4 * n * n) * qbin(L - n, n) for n in range(L // 2 + 1)
    )


def rr_check(L: int) -> tuple[QPoly, QPoly, QPoly]:
    """The finite Rogers-Ramanujan identity, both closed forms.

    Returns (lhs, rhs_binomial, rhs_trinomial) where rhs_binomial is the
    alternating mod-5 binomial sum with floor arguments taken literally and
    rhs_trinomial is the alternating mod-5 diagonal-trinomial sum.  All
    three are equal.
    """
    lhs = rr_lhs(L)
    jmax = L // 5 + 2
    rhs_b = qpoly_sum(
        qmono((-1) ** (j & 1), 2 * j * (5 * j + 1)) * qbin(L, (L - 5 * j) // 2)
        for j in range(-jmax, jmax + 1)
    )
    return lhs, rhs_b, _rank_theta(1, L)


# ---------------------------------------------------------------------------
# Goellnitz-Gordon


def _gg_partial(nmax: int, order4: int) -> QSeries:
    acc = QSeries({}, order4)
    for n in range(nmax + 1):
        num = qmono(1, 4 * n * n) * poch_general(PochSpec(-1, 4, n, 8))
        den = PochSpec(1, 8, n, 8).factors()
        acc = acc + truncate(num, order4) * inverse_pochhammer_series(den, order4)
    return acc


def gg_check(order4: int) -> tuple[QSeries, QSeries]:
    """Series vs product for the first Goellnitz-Gordon identity.

    lhs = sum_n q^(n^2) (-q; q^2)_n / (q^2; q^2)_n, rhs = the modulus-8
    product with residues 1, 4, 7.  The summation range is self-checked by
    widening.
    """
    if order4 < 0:
        raise ValueError("order must be >= 0")
    nmax = isqrt(order4) // 2 + 1
    lhs = _gg_partial(nmax, order4)
    if lhs != _gg_partial(nmax + 2, order4):
        raise SelfCheckError("series sum changed when the n-range was widened")
    rhs = (
        euler_product(1, 4, 32, -1, order4)
        * euler_product(1, 16, 32, -1, order4)
        * euler_product(1, 28, 32, -1, order4)
    )
    return lhs, rhs


def jacobi_triple_check(order4: int) -> tuple[QSeries, QSeries]:
    """Theta sum sum_j (-1)^j q^(2j^2 + j/2) against its triple-product
    form (q^(3/2); q^4) (q^(5/2); q^4) (q^4; q^4); truncated, range
    self-checked."""
    if order4 < 0:
        raise ValueError("order must be >= 0")

    def theta(jmax: int) -> QPoly:
        return qpoly_sum(
            qmono((-1) ** (j & 1), 8 * j * j + 2 * j)
            for j in range(-jmax, jmax + 1)
            if 8 * j * j + 2 * j <= order4
        )

    jmax = isqrt(order4 // 8 + 1) + 2
    lhs = theta(jmax)
    if lhs != theta(jmax + 2):
        raise SelfCheckError("theta sum changed when the j-range was widened")
    rhs = (
        euler_product(1, 6, 16, 1, order4)
        * euler_product(1, 10, 16, 1, order4)
        * euler_product(1, 16, 16, 1, order4)
    )
    return truncate(lhs, order4), rhs


# ---------------------------------------------------------------------------
# double-sum identities with mixed difference conditions


def bmo_check(L: int) -> tuple[QPoly, QPoly]:
    """Double binomial sum against the signed T_0 combination of moduli
    4j, 4j+1.

    lhs = sum q^((m^2+n^2)/2) [L-m, n][n, m]; rhs carries weight
    (-1)^j q^(2j^2 + j/2).
    """
    if L < 0:
        raise ValueError("L must be >= 0")
    parts = []
    for m in range(L + 1):
        for n in range(m, L - m + 1):
            parts.append(
                qmono(1, 2 * (m * m + n * n)) * qbin(L - m, n) * qbin(n, m)
            )
    lhs = qpoly_sum(parts)
    jmax = L // 4 + 2
    rhs = qpoly_sum(
        qmono((-1) ** (j & 1), 8 * j * j + 2 * j)
        * (t_n(0, L, 4 * j) + t_n(0, L, 4 * j + 1))
        for j in range(-jmax, jmax + 1)
    )
    return lhs, rhs


def bmo_companion_check(L: int) -> tuple[QPoly, QPoly]:
    """The binomial companion: an even-coset double sum against a signed
    combination of central binomials at shifts 4j and 4j+1."""
    if L < 0:
        raise ValueError("L must be >= 0")
    parts = []
    for m1 in range(2 * L + 1):
        for m2 in range(m1 % 2, min(m1, 2 * L - m1) + 1, 2):
            b1 = qbin(L + (m1 - m2) // 2, m1)
            if b1.is_zero():
                continue
            b2 = qbin((m1 + m2) // 2, m2)
            if b2.is_zero():
                continue
            parts.append(qmono(1, m1 * m1 + m2 * m2) * b1 * b2)
    lhs = qpoly_sum(parts)
    jmax = L // 4 + 2
    rhs_parts = []
    for j in range(-jmax, jmax + 1):
        sign = (-1) ** (j & 1)
        rhs_parts.append(qmono(sign, 2 * j * (20 * j + 1)) * qbin(2 * L, L - 4 * j))
        rhs_parts.append(
            qmono(sign, 2 * (4 * j + 1) * (5 * j + 1)) * qbin(2 * L, L - 4 * j - 1)
        )
    return lhs, qpoly_sum(rhs_parts)


# ---------------------------------------------------------------------------
# lattice-sum versus theta-like-sum families
#
# Families 1 and 2 weight T_0 at multiples of the larger modulus; families
# 3 and 4 weight diagonal round trinomials at even multiples.  The lattice
# sides are FermionicSpec instances over the incidence matrix of the
# relevant continued fraction, extended by two rows for families 3 and 4.

PROP_FAMILIES = (1, 2, 3, 4)

# engine-degenerate small pairs of family 1 with closed lhs
_FAMILY1_SPECIAL = {(3, 4), (2, 3)}


@dataclass(frozen=True)
class PropParams:
    """Validated parameter bundle (family, p, pp, L) for families 1-4."""

    family: int
    p: int
    pp: int
    L: int

    def __post_init__(self) -> None:
        f, p, pp, L = self.family, self.p, self.pp, self.L
        if f not in PROP_FAMILIES:
            raise ValueError(f"family must be one of {PROP_FAMILIES}")
        if L < 0:
            raise ValueError("L must be >= 0")
        if not 1 < p < pp or gcd(p, pp) != 1:
            raise ValueError("need coprime 1 < p < pp")
        if f == 1 and 2 * pp > 3 * p:
            raise ValueError("family 1 needs pp <= 3p/2")
        if f == 2:
            if not 3 * p < 2 * pp < 4 * p:
                raise ValueError("family 2 needs 3p/2 < pp < 2p")
            if continued_fraction(p, pp).d < 2:
                # (3,5): its content is the dual of the round-trinomial
                # Rogers-Ramanujan form, verified elsewhere
                raise ValueError(f"({p}, {pp}) is degenerate for family 2")
        if f == 3 and not pp < 2 * p:
            raise ValueError("family 3 needs pp < 2p")
        if f == 4 and not 2 * pp < 3 * p:
            raise ValueError("family 4 needs pp < 3p/2")


def diagonal_rs(p: int, pp: int) -> tuple[tuple[int, int], ...]:
    """All (r, s) with 1 <= r < p, 1 <= s < pp and |pp(r-s) + ps| = 1,
    lexicographically sorted."""
    sols = tuple(
        sorted(
            (r, s)
            for r in range(1, p)
            for s in range(1, pp)
            if abs(pp * (r - s) + p * s) == 1
        )
    )
    if not sols:
        raise ValueError(f"no admissible (r, s) for ({p}, {pp})")
    return sols


def _theta_t0(p: int, pp: int, L: int, r: int, s: int) -> QPoly:
    # weights (-1-free) with quadratic exponents j(pp(2p-pp)j + 2)/2 and
    # ((2p-pp)j + 2r - s)(pp j + s)/2
    c = 2 * p - pp
    jmax = L // pp + 2
    parts = []
    for j in range(-jmax, jmax + 1):
        parts.append(qmono(1, 2 * j * (pp * c * j + 2)) * t_n(0, L, pp * j))
        parts.append(
            qmono(-1, 2 * (c * j + 2 * r - s) * (pp * j + s)) * t_n(0, L, pp * j + s)
        )
    return qpoly_sum(parts)


def _theta_round(pp: int, c: int, L: int, r: int, s: int) -> QPoly:
    # diagonal round trinomials at 2*pp*j and 2*pp*j + 2s; c is the
    # companion modulus (p + pp or 2pp - p)
    jmax = L // (2 * pp) + 2
    parts = []
    for j in range(-jmax, jmax + 1):
        parts.append(
            qmono(1, 4 * j * (pp * c * j + 1)) * trinomial(L, 2 * pp * j, 2 * pp * j)
        )
        parts.append(
            qmono(-1, 4 * (pp * j + s) * (c * j + r + s))
            * trinomial(L, 2 * pp * j + 2 * s, 2 * pp * j + 2 * s)
        )
    return qpoly_sum(parts)


def _rank_theta(n: int, L: int) -> QPoly:
    # moduli (n+3, n+4), diagonal round trinomials at (n+4)j and (n+4)j+2
    a, b = n + 3, n + 4
    jmax = L // b + 2
    parts = []
    for j in range(-jmax, jmax + 1):
        parts.append(qmono(1, 2 * j * (a * b * j + 2)) * trinomial(L, b * j, b * j))
        parts.append(
            qmono(-1, 2 * (a * j + 2) * (b * j + 2))
            * trinomial(L, b * j + 2, b * j + 2)
        )
    return qpoly_sum(parts)


def _coset_parity(d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # m_1 + L even, the rest even
    return (((1,), 1),) + tuple(((j,), 0) for j in range(2, d + 1))


def _glued_parity(d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # m_1 + m_2 even, the rest even
    return (((1, 2), 0),) + tuple(((j,), 0) for j in range(3, d + 1))


def _extend_incidence(
    inner: tuple[tuple[int, ...], ...], family: int
) -> tuple[tuple[int, ...], ...]:
    """Border the inner incidence matrix with one extra leading row and
    column; the border pattern differs between families 3 and 4."""
    dim = len(inner) + 1
    if family == 3:
        row0 = [-1, -1] + [0] * (dim - 2)
        if dim >= 3:
            row0[2] = 1
        col0 = [1 if i in (1, 2) else 0 for i in range(dim)]
    else:
        row0 = [0] * dim
        if dim >= 3:
            row0[2] = -1
        col0 = [1 if i == 2 else 0 for i in range(dim)]
    rows = [tuple(row0)]
    for i in range(1, dim):
        rows.append((col0[i],) + inner[i - 1])
    return tuple(rows)


def prop_lattice_spec(family: int, p: int, pp: int) -> FermionicSpec:
    """The lattice-sum description of the left side for families 1-4.

    Families 1 and 2 live on the incidence matrix of p/(pp-p) with the
    coset parity m + L e_1 even; families 3 and 4 on a bordered incidence
    matrix of the shifted fraction with m_1 + m_2 even.
    """
    if family in (1, 2):
        im = incidence(continued_fraction(p, pp))
        d = im.dim
        if d < 2:
            raise ValueError(f"({p}, {pp}) has no generic lattice form")
        if family == 1:
            top_l = (0, 1) + (0,) * (d - 2)
            return FermionicSpec(
                dim=d,
                quad=im.cartan2,
                quad_div=1,
                top_l=top_l,
                top_mat=im.inc,
                parity=_coset_parity(d),
            )
        top_l = (1, 1) + (0,) * (d - 2)
        return FermionicSpec(
            dim=d,
            quad=im.cartan2,
            quad_div=1,
            top_l=top_l,
            top_mat=im.inc,
            parity=_coset_parity(d),
            lin_l=(0, -2) + (0,) * (d - 2),
            const_l2=1,
        )
    if family == 3:
        inner = incidence(continued_fraction(pp, p + pp)).inc
    elif family == 4:
        inner = incidence(continued_fraction(pp, 2 * pp - p)).inc
    else:
        raise ValueError(f"family must be one of {PROP_FAMILIES}")
    ext = _extend_incidence(inner, family)
    dim = len(ext)
    # Same doubled-Cartan exponent convention as families 1 and 2: the glue
    # rows change the incidence matrix but not the normalisation.
    quad = tuple(
        tuple(2 * (i == j) - ext[i][j] for j in range(dim)) for i in range(dim)
    )
    return FermionicSpec(
        dim=dim,
        quad=quad,
        quad_div=1,
        top_l=(2,) + (0,) * (dim - 1),
        top_mat=ext,
        parity=_glued_parity(dim),
    )


def prop_theta(family: int, p: int, pp: int, L: int) -> QPoly:
    """Right side of the family identity at (p, pp, L)."""
    if family in (1, 2):
        r, s = rs_pair(p, pp)[0]
        return _theta_t0(p, pp, L, r, s)
    if family == 3:
        r, s = rs_pair(p, pp)[0]
        return _theta_round(pp, p + pp, L, r, s)
    if family == 4:
        r, s = diagonal_rs(p, pp)[0]
        return _theta_round(pp, 2 * pp - p, L, r, s)
    raise ValueError(f"family must be one of {PROP_FAMILIES}")


def prop_check(params: PropParams) -> tuple[QPoly, QPoly]:
    """Both sides of the family identity; they must be equal.

    The two engine-degenerate family-1 pairs have closed left sides:
    (3,4) gives 1 for even L and 0 for odd L, (2,3) gives 1 exactly at
    L = 0.
    """
    f, p, pp, L = params.family, params.p, params.pp, params.L
    if f == 1 and (p, pp) in _FAMILY1_SPECIAL:
        if (p, pp) == (3, 4):
            lhs = QPoly.one() if L % 2 == 0 else QPoly.zero()
        else:
            lhs = QPoly.one() if L == 0 else QPoly.zero()
    else:
        lhs = lattice_sum(prop_lattice_spec(f, p, pp), L)
    return lhs, prop_theta(f, p, pp, L)


def prop5_check(n: int, L: int) -> tuple[QPoly, QPoly]:
    """Both sides of the rank-n identity: an unconstrained lattice sum over
    the rank-n path-graph quadratic form against the modulus-(n+4)
    diagonal-trinomial sum."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    if L < 0:
        raise ValueError("L must be >= 0")
    quad = tuple(
        tuple(4 * (i == j) - 2 * (abs(i - j) == 1) for j in range(n))
        for i in range(n)
    )
    top_mat = tuple(
        tuple(2 * (abs(i - j) == 1) - 2 * (i == j) for j in range(n))
        for i in range(n)
    )
    spec = FermionicSpec(
        dim=n,
        quad=quad,
        quad_div=1,
        top_l=(2,) + (0,) * (n - 1),
        top_mat=top_mat,
    )
    return lattice_sum(spec, L), _rank_theta(n, L)


# ---------------------------------------------------------------------------
# composed-form oracles: the same left sides reached through the plain
# fermionic polynomials instead of the bordered lattice


def even_form(p: int, pp: int, L: int) -> QPoly:
    """sum_k q^(k^2) [L, 2k] F_k(p, pp): equals the family-3 left side."""
    return qpoly_sum(
        qmono(1, 4 * k * k) * qbin(L, 2 * k) * fermionic(p, pp, k)
        for k in range(L // 2 + 1)
    )


def even_dual_form(p: int, pp: int, L: int) -> QPoly:
    """sum_k q^(2k^2) [L, 2k] F_k(p, pp; 1/q): equals the family-4 left
    side."""
    return qpoly_sum(
        qmono(1, 8 * k * k) * qbin(L, 2 * k) * fermionic(p, pp, k).dual()
        for k in range(L // 2 + 1)
    )


def bosonic_binomial_transform(p: int, pp: int, L: int) -> QPoly:
    """sum_k (-1)^(L-k) q^(C(L-k,2) - L^2/2) [L, k] B_k(p, pp): equals the
    family-1/2 right side."""
    return qpoly_sum(
        qmono((-1) ** ((L - k) & 1), 4 * _binom2(L - k) - 2 * L * L)
        * qbin(L, k)
        * bosonic(p, pp, k)
        for k in range(L + 1)
    )


# ---------------------------------------------------------------------------
# infinite-size limit of the rank-n family


def _inv_qfact(m: int, order4: int) -> QSeries:
    return inverse_pochhammer_series(
        ((1, 4 * j) for j in range(1, m + 1)), order4
    )


def tainf_check(n: int, order4: int) -> tuple[QSeries, QSeries]:
    """Character limit of the rank-n identity.

    lhs = the lattice series with 1/(q)_{m_1} replacing the first binomial;
    rhs = the vacuum-adjacent character at moduli ((n+3)/2, n+4) for odd n
    and ((n+4)/2, n+3) for even n, both truncated to order4.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    if order4 < 0:
        raise ValueError("order must be >= 0")
    half = order4 // 2
    spread = isqrt(half) + 1
    inv_cache: dict[int, QSeries] = {}
    acc = QSeries({}, order4)
    m = [0] * n

    def form_prefix(k: int) -> int:
        # lower bound on the full quadratic form given m[0..k-1]
        v = m[0] * m[0]
        for i in range(k - 1):
            v += (m[i] - m[i + 1]) ** 2
        return v

    def leaf() -> QPoly:
        full = form_prefix(n) + m[n - 1] * m[n - 1]
        e4 = 2 * full
        if e4 > order4:
            return QPoly.zero()
        prod = qmono(1, e4)
        for j in range(2, n + 1):
            nxt = m[j] if j < n else 0
            b = qbin(m[j - 2] - m[j - 1] + nxt, m[j - 1])
            if b.is_zero():
                return QPoly.zero()
            prod = prod * b
        return prod

    def rec(k: int) -> None:
        nonlocal acc
        if k == n:
            poly = leaf()
            if not poly.is_zero():
                m1 = m[0]
                if m1 not in inv_cache:
                    inv_cache[m1] = _inv_qfact(m1, order4)
                acc = acc + truncate(poly, order4) * inv_cache[m1]
            return
        hi = (m[k - 1] if k else 0) + spread
        for v in range(hi + 1):
            m[k] = v
            if 2 * form_prefix(k + 1) <= order4:
                rec(k + 1)
        m[k] = 0

    rec(0)
    if n % 2:
        rhs = character((n + 3) // 2, n + 4, 1, 2, order4)
    else:
        rhs = character((n + 4) // 2, n + 3, 1, 2, order4)
    return acc, rhs
