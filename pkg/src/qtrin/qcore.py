"""Exact arithmetic core: sparse Laurent polynomials in q, truncated power
series, and factored rational values.

Conventions shared by the whole package:

* Exponents count quarter powers of q.  A stored exponent e stands for
  q**(e/4), so q itself is stored as 4, q**(1/2) as 2 and q**(-3/4) as -3.
  One global denominator of 4 covers every half- and quarter-integral
  power produced by trinomial and lattice-sum work, so all exponent
  arithmetic stays in plain ints.
* Coefficients are Python ints, hence exact at any size.
* Every value is immutable after construction and safe to share between
  concurrent tasks.  Module-level caches are only ever written with
  idempotent inserts, which is sound under concurrent use.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Iterator


class ZeroFactorError(ValueError):
    """A factor (1 - sigma*q^e) is identically zero or not invertible over Z."""


class ExactDivisionError(ArithmeticError):
    """Division left a nonzero remainder where exactness was required."""


class SelfCheckError(RuntimeError):
    """Widening an enumeration range changed a result that must be stable."""


# ---------------------------------------------------------------------------
# sparse Laurent polynomials


def _mul_dict(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _mul_kronecker(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    # Pack each polynomial into one big int with fixed-width signed digits,
    # multiply the ints, and read the digits back.  The digit width must
    # exceed the largest possible coefficient of the product.
    amin = min(a)
    bmin = min(b)
    span = (max(a) - amin) + (max(b) - bmin)
    bound = (
        min(len(a), len(b))
        * max(abs(c) for c in a.values())
        * max(abs(c) for c in b.values())
    )
    w = ((bound.bit_length() + 2) + 7) // 8 * 8
    pa = 0
    for e, c in a.items():
        pa += c << (w * (e - amin))
    pb = 0
    for e, c in b.items():
        pb += c << (w * (e - bmin))
    prod = pa * pb

    step = w // 8
    ndig = span + 1
    data = prod.to_bytes(ndig * step + step, "little", signed=True)
    half = 1 << (w - 1)
    full = 1 << w
    base = amin + bmin
    out: dict[int, int] = {}
    carry = 0
    for i in range(ndig):
        raw = int.from_bytes(data[i * step : (i + 1) * step], "little") + carry
        if raw >= half:
            raw -= full
            carry = 1
        else:
            carry = 0
        if raw:
            out[base + i] = raw
    return out


class QPoly:
    """Sparse Laurent polynomial in q with quarter-integral exponents.

    Immutable; zero coefficients are never stored.  Maps stored exponent
    (an int, counting quarter powers) to an int coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self._terms = {e: c for e, c in terms.items() if c} if terms else {}

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "QPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "QPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "QPoly":
        return _ONE

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls({0: c})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def coeff(self, e4: int) -> int:
        return self._terms.get(e4, 0)

    def num_terms(self) -> int:
        return len(self._terms)

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        out = dict(self._terms)
        get = out.get
        for e, c in other._terms.items():
            v = get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return QPoly._raw(out)

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        out = dict(self._terms)
        get = out.get
        for e, c in other._terms.items():
            v = get(e, 0) - c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return QPoly._raw(out)

    def __neg__(self) -> "QPoly":
        return QPoly._raw({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            if not other:
                return _ZERO
            return QPoly._raw({e: c * other for e, c in self._terms.items()})
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(b) == 1:
            (eb, cb), = b.items()
            return QPoly._raw({e + eb: c * cb for e, c in a.items()})
        if len(a) == 1:
            (ea, ca), = a.items()
            return QPoly._raw({ea + e: ca * c for e, c in b.items()})
        la, lb = len(a), len(b)
        if la * lb >= 256:
            span = (max(a) - min(a)) + (max(b) - min(b))
            # Kronecker packing loses to schoolbook when the product is
            # extremely sparse relative to its exponent span.
            if span <= 16 * (la + lb):
                return QPoly._raw(_mul_kronecker(a, b))
        return QPoly._raw(_mul_dict(a, b))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def dual(self) -> "QPoly":
        """Substitute q -> 1/q (negate every exponent)."""
        return QPoly._raw({-e: c for e, c in self._terms.items()})

    def eval_at_one(self) -> int:
        """Value at q = 1, i.e. the coefficient sum."""
        return sum(self._terms.values())

    def __repr__(self) -> str:
        return f"QPoly({format_qpoly(self)})"


_ZERO = QPoly._raw({})
_ONE = QPoly._raw({0: 1})


def qmono(coeff: int, e4: int) -> QPoly:
    """Monomial coeff * q**(e4/4)."""
    if not coeff:
        return _ZERO
    return QPoly._raw({e4: coeff})


def one_plus_q(e4: int) -> QPoly:
    """1 + q**(e4/4), collapsing to the constant 2 at e4 = 0."""
    if e4 == 0:
        return QPoly._raw({0: 2})
    return QPoly._raw({0: 1, e4: 1})


def one_minus_q(e4: int) -> QPoly:
    """1 - q**(e4/4), collapsing to the constant 0 at e4 = 0."""
    if e4 == 0:
        return _ZERO
    return QPoly._raw({0: 1, e4: -1})


def qpoly_sum(parts: Iterable[QPoly]) -> QPoly:
    """Sum many polynomials with one accumulator dict."""
    out: dict[int, int] = {}
    get = out.get
    for p in parts:
        for e, c in p._terms.items():
            v = get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return QPoly._raw(out)


def divide_exact_by_factor(p: QPoly, sigma: int, e4: int) -> QPoly:
    """Exact division of p by (1 - sigma*q^(e4/4)).

    Raises ExactDivisionError when the factor does not divide p; a failure
    here always signals a formula bug upstream, never a data problem.
    """
    if sigma == 1 and e4 == 0:
        raise ZeroFactorError("(1 - q^0) is identically zero")
    if p.is_zero():
        return p
    if e4 == 0:
        # factor is the constant 2
        out = {}
        for e, c in p._terms.items():
            if c % 2:
                raise ExactDivisionError("coefficient not divisible by 2")
            out[e] = c // 2
        return QPoly._raw(out)
    if e4 < 0:
        # (1 - s*q^e4) = -s*q^e4 * (1 - s*q^-e4); reduce to a positive shift
        q = divide_exact_by_factor(p, sigma, -e4)
        return QPoly._raw({e - e4: -sigma * c for e, c in q._terms.items()})
    rem = dict(p._terms)
    max_e = max(rem)
    quot: dict[int, int] = {}
    while rem:
        m = min(rem)
        if m > max_e:
            raise ExactDivisionError("factor does not divide the polynomial")
        c = rem.pop(m)
        quot[m] = c
        e2 = m + e4
        v = rem.get(e2, 0) + sigma * c
        if v:
            rem[e2] = v
        elif e2 in rem:
            del rem[e2]
    return QPoly._raw(quot)


# ---------------------------------------------------------------------------
# truncated series


class QSeries:
    """Power series known exactly up to and including q**(order4/4).

    Arithmetic discards every term above the order; binary operations take
    the smaller order of the two operands.
    """

    __slots__ = ("order4", "_terms")

    def __init__(self, terms: dict[int, int] | None, order4: int):
        self.order4 = order4
        self._terms = (
            {e: c for e, c in terms.items() if c and e <= order4} if terms else {}
        )

    @classmethod
    def _raw(cls, terms: dict[int, int], order4: int) -> "QSeries":
        obj = object.__new__(cls)
        obj._terms = terms
        obj.order4 = order4
        return obj

    @classmethod
    def zero(cls, order4: int) -> "QSeries":
        return cls._raw({}, order4)

    @classmethod
    def one(cls, order4: int) -> "QSeries":
        return cls._raw({0: 1}, order4)

    def coeff(self, e4: int) -> int:
        if e4 > self.order4:
            raise ValueError(f"coefficient q^({e4}/4) is beyond the order")
        return self._terms.get(e4, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order4 == other.order4 and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.order4, frozenset(self._terms.items())))

    def __add__(self, other: "QSeries") -> "QSeries":
        order = min(self.order4, other.order4)
        out = {e: c for e, c in self._terms.items() if e <= order}
        get = out.get
        for e, c in other._terms.items():
            if e > order:
                continue
            v = get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return QSeries._raw(out, order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __neg__(self) -> "QSeries":
        return QSeries._raw({e: -c for e, c in self._terms.items()}, self.order4)

    def __mul__(self, other: "QSeries | QPoly | int") -> "QSeries":
        if isinstance(other, int):
            if not other:
                return QSeries.zero(self.order4)
            return QSeries._raw(
                {e: c * other for e, c in self._terms.items()}, self.order4
            )
        if isinstance(other, QPoly):
            other = QSeries._raw(dict(other._terms), self.order4)
        order = min(self.order4, other.order4)
        a, b = self._terms, other._terms
        out: dict[int, int] = {}
        get = out.get
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                if e > order:
                    continue
                out[e] = get(e, 0) + ca * cb
        return QSeries._raw({e: c for e, c in out.items() if c}, order)

    __rmul__ = __mul__

    def div_exact(self, k: int) -> "QSeries":
        """Divide every coefficient by the integer k, which must be exact."""
        out = {}
        for e, c in self._terms.items():
            if c % k:
                raise ExactDivisionError(f"coefficient {c} not divisible by {k}")
            out[e] = c // k
        return QSeries._raw(out, self.order4)

    def __repr__(self) -> str:
        return f"QSeries({format_qseries(self)})"


def truncate(p: QPoly, order4: int) -> QSeries:
    """View a polynomial as a series up to order4 quarter units."""
    return QSeries({e: c for e, c in p._terms.items()}, order4)


def geometric_inverse(sigma: int, e4: int, order4: int) -> QSeries:
    """Series expansion of 1/(1 - sigma*q^(e4/4)); requires e4 > 0."""
    if e4 <= 0:
        raise ZeroFactorError(
            "only factors with positive exponent can be inverted exactly over Z"
        )
    out = {}
    j = 0
    c = 1
    while j <= order4:
        out[j] = c
        j += e4
        c *= sigma
    return QSeries._raw(out, order4)


def inverse_pochhammer_series(
    factors: Iterable[tuple[int, int]], order4: int
) -> QSeries:
    """Product of 1/(1 - sigma*q^(e4/4)) over the given (sigma, e4) factors."""
    out = QSeries.one(order4)
    for sigma, e4 in factors:
        out = out * geometric_inverse(sigma, e4, order4)
    return out


def euler_product(
    sigma: int, start4: int, step4: int, power: int, order4: int
) -> QSeries:
    """Truncated product of (1 - sigma*q^((start4 + j*step4)/4)) for j >= 0,
    or of its inverse when power is -1."""
    if step4 <= 0:
        raise ValueError("step must be positive")
    if power not in (1, -1):
        raise ValueError("power must be +1 or -1")
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    if sigma == 1 and start4 == 0:
        raise ZeroFactorError("(1 - q^0) is a zero factor")
    if power == -1 and start4 <= 0:
        raise ZeroFactorError("inverse factors need a positive starting exponent")
    out = QSeries.one(order4)
    e = start4
    while e <= order4:
        if power == 1:
            out = out * QPoly._raw({0: 1, e: -sigma} if e else {0: 1 - sigma})
        else:
            out = out * geometric_inverse(sigma, e, order4)
        e += step4
    return out


# ---------------------------------------------------------------------------
# factored rational values


def expand_factors(den: tuple[tuple[int, int], ...]) -> QPoly:
    """Expand a factor multiset prod(1 - sigma*q^(e4/4)) into a polynomial."""
    got = _DEN_CACHE.get(den)
    if got is None:
        p = _ONE
        for sigma, e4 in den:
            p = p * (QPoly._raw({0: 1, e4: -sigma}) if e4 else QPoly.const(1 - sigma))
        _DEN_CACHE[den] = got = p
    return got


_DEN_CACHE: dict[tuple[tuple[int, int], ...], QPoly] = {}


class FactoredRatio:
    """num / prod(1 - sigma*q^(e4/4)) with the denominator kept as a factor
    multiset.

    The factor (+1, 0) is rejected outright, being identically zero.  No
    gcd reduction ever happens; equality goes through ratio_equal (cross
    multiplication after cancelling shared factors).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly, den: Iterable[tuple[int, int]] = ()):
        den = tuple(sorted(den))
        for sigma, e4 in den:
            if sigma == 1 and e4 == 0:
                raise ZeroFactorError("(1 - q^0) cannot appear in a denominator")
            if sigma not in (1, -1):
                raise ValueError("factor sign must be +1 or -1")
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> "FactoredRatio":
        return cls(_ZERO)

    @classmethod
    def one(cls) -> "FactoredRatio":
        return cls(_ONE)

    @classmethod
    def from_poly(cls, p: QPoly) -> "FactoredRatio":
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __mul__(self, other: "FactoredRatio | QPoly | int") -> "FactoredRatio":
        if isinstance(other, FactoredRatio):
            return FactoredRatio(self.num * other.num, self.den + other.den)
        return FactoredRatio(self.num * other, self.den)

    __rmul__ = __mul__

    def __neg__(self) -> "FactoredRatio":
        return FactoredRatio(-self.num, self.den)

    def __add__(self, other: "FactoredRatio") -> "FactoredRatio":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        c1 = Counter(self.den)
        c2 = Counter(other.den)
        joint = c1 | c2
        num = self.num * expand_factors(_factor_tuple(joint - c1)) + (
            other.num * expand_factors(_factor_tuple(joint - c2))
        )
        return FactoredRatio(num, _factor_tuple(joint))

    def __sub__(self, other: "FactoredRatio") -> "FactoredRatio":
        return self + (-other)

    def divided_by(self, factors: Iterable[tuple[int, int]]) -> "FactoredRatio":
        return FactoredRatio(self.num, self.den + tuple(factors))

    def den_poly(self) -> QPoly:
        return expand_factors(self.den)

    def equals(self, other: "FactoredRatio") -> bool:
        return ratio_equal(self, other)

    def clear_denominator(self) -> QPoly:
        """Divide the numerator exactly by every denominator factor."""
        p = self.num
        for sigma, e4 in self.den:
            p = divide_exact_by_factor(p, sigma, e4)
        return p

    def __repr__(self) -> str:
        if not self.den:
            return f"FactoredRatio({format_qpoly(self.num)})"
        return f"FactoredRatio({format_qpoly(self.num)} / {self.den})"


def _factor_tuple(counter: Counter) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(counter.elements()))


def ratio_equal(r1: FactoredRatio, r2: FactoredRatio) -> bool:
    """Exact equality of two factored ratios by cross multiplication."""
    c1 = Counter(r1.den)
    c2 = Counter(r2.den)
    common = c1 & c2
    left = r1.num * expand_factors(_factor_tuple(c2 - common))
    right = r2.num * expand_factors(_factor_tuple(c1 - common))
    return left == right


def ratio_sum(parts: Iterable[FactoredRatio]) -> FactoredRatio:
    out = FactoredRatio.zero()
    for r in parts:
        out = out + r
    return out


# ---------------------------------------------------------------------------
# rendering


def format_exponent(e4: int) -> str:
    f = Fraction(e4, 4)
    if f.denominator == 1:
        return str(f.numerator)
    return f"({f.numerator}/{f.denominator})"


def _format_term(e4: int, c: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if e4 == 0:
        body = str(mag)
    else:
        qpart = "q" if e4 == 4 else f"q^{format_exponent(e4)}"
        body = qpart if mag == 1 else f"{mag}*{qpart}"
    if first:
        return f"{sign}{body}"
    return f"{sign} {body}"


def format_qpoly(p: QPoly) -> str:
    """Render with terms in increasing exponent, exponents as quarters."""
    items = p.sorted_items()
    if not items:
        return "0"
    parts = []
    for i, (e, c) in enumerate(items):
        parts.append(_format_term(e, c, i == 0))
    return " ".join(parts)


def format_qseries(s: QSeries) -> str:
    items = s.sorted_items()
    tail = f"O(q^{format_exponent(s.order4 + 1)})"
    if not items:
        return tail
    parts = []
    for i, (e, c) in enumerate(items):
        parts.append(_format_term(e, c, i == 0))
    return " ".join(parts) + " + " + tail
