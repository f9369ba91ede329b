"""Deterministic verification suites over the identity families.

Each case covers one identity at one outer parameter with the inner sweep
folded into the case body; a check returns "" on success or a short detail
string naming the failing point and the exact difference.  Case lists are
fully determined by (suite, options), so reports replay byte for byte.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from random import Random
from time import perf_counter
from typing import Any

from .bailey import (
    LEMMA_SPECIALIZATIONS,
    bailey_lemma_sides,
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
from .connect import (
    expand_binomial_in_trinomials,
    expand_trinomial_in_binomials,
    orthogonality_check,
    rederive_binomial_expansion,
    t0_t1_bridge,
    t_even_expansion,
    trinomial_even_expansion,
)
from .identities import (
    PropParams,
    bmo_check,
    bmo_companion_check,
    bosonic_binomial_transform,
    even_dual_form,
    even_form,
    gg_check,
    jacobi_triple_check,
    prop5_check,
    prop_check,
    rr_check,
    tainf_check,
)
from .qbinom import (
    APPENDIX_IDENTITIES,
    PochSpec,
    appendix_identity,
    poch_general,
    qbin,
)
from .qcore import (
    QPoly,
    QSeries,
    format_qpoly,
    format_qseries,
    inverse_pochhammer_series,
    qmono,
    qpoly_sum,
    ratio_equal,
    truncate,
)
from .qtrinom import t0_limit, t_n, trinomial, trinomial_limit
from .report import CaseResult, SuiteReport
from .virasoro import bosonic, character, fermionic

SUITES = (
    "appendix",
    "binom",
    "trinom",
    "connect",
    "virasoro",
    "section3",
    "props",
    "bailey",
    "limits",
    "all",
)

BF_PAIRS = ((3, 4), (4, 5), (5, 6), (5, 7), (5, 8), (7, 10), (7, 12))
PROP_PAIRS = {
    1: ((2, 3), (3, 4), (4, 5), (5, 7), (7, 10)),
    2: ((4, 7), (5, 8), (7, 12)),
    3: ((3, 4), (4, 5), (5, 7)),
    4: ((5, 7), (7, 10), (7, 9)),
}


class UsageError(ValueError):
    """Bad suite name or option combination; maps to exit code 2."""


@dataclass(frozen=True)
class SuiteOptions:
    lmax: int | None = None
    order: int | None = None
    p: int | None = None
    pp: int | None = None
    n: int | None = None
    threads: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.lmax is not None and self.lmax < 0:
            raise UsageError("lmax must be >= 0")
        if self.order is not None and self.order < 1:
            raise UsageError("order must be >= 1")
        if (self.p is None) != (self.pp is None):
            raise UsageError("p and pp must be given together")
        if self.n is not None and self.n < 1:
            raise UsageError("n must be >= 1")
        if self.threads < 1:
            raise UsageError("threads must be >= 1")


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


# ---------------------------------------------------------------------------
# check bodies; each returns "" on pass


def check_appendix_box(name: str, L: int, amax: int) -> str:
    for a in range(amax + 1):
        for b in range(-amax, amax + 1):
            for c in range(amax + 1) if name == "qS" else (None,):
                lhs, rhs = appendix_identity(name, L, a, b, c)
                if lhs != rhs:
                    at = f"a={a} b={b}" + ("" if c is None else f" c={c}")
                    return f"{at}: {format_qpoly(lhs - rhs)}"
    return ""


def check_binom_recurrence(L: int) -> str:
    for a in range(0 if L else 1, L + 2):
        lhs = qbin(L, a)
        rhs = qbin(L - 1, a - 1) + qmono(1, 4 * a) * qbin(L - 1, a)
        if lhs != rhs:
            return f"a={a}: {format_qpoly(lhs - rhs)}"
    return ""


def check_binom_duality(L: int) -> str:
    for a in range(L + 1):
        lhs = qbin(L, a).dual()
        rhs = qmono(1, -4 * a * (L - a)) * qbin(L, a)
        if lhs != rhs:
            return f"a={a}: {format_qpoly(lhs - rhs)}"
    return ""


def check_binom_newton(L: int) -> str:
    # product form of (-1; q)_L against its binomial expansion
    lhs = poch_general(PochSpec(-1, 0, L))
    rhs = qpoly_sum(qmono(1, 4 * _binom2(k)) * qbin(L, k) for k in range(L + 1))
    if lhs != rhs:
        return format_qpoly(lhs - rhs)
    return ""


def check_binom_symmetry(L: int) -> str:
    for a in range(L + 1):
        if qbin(L, a) != qbin(L, L - a):
            return f"a={a}"
    return ""


def check_trinom_round_symmetry(L: int) -> str:
    bmax = min(L, 4)
    for a in range(-L, L + 1):
        for b in range(-bmax, bmax + 1):
            lhs = trinomial(L, b, a)
            rhs = qmono(1, 4 * a * (a - b)) * trinomial(L, b - 2 * a, -a)
            if lhs != rhs:
                return f"a={a} b={b}: {format_qpoly(lhs - rhs)}"
    return ""


def check_trinom_t_symmetry(L: int) -> str:
    for n in range(3):
        for a in range(L + 1):
            if t_n(n, L, a) != t_n(n, L, -a):
                return f"n={n} a={a}"
    return ""


def check_trinom_t_duality(L: int) -> str:
    for n in range(3):
        for a in range(-L, L + 1):
            lhs = t_n(n, L, a)
            rhs = qmono(1, 2 * (L - a) * (L + a - n)) * trinomial(L, a - n, a).dual()
            if lhs != rhs:
                return f"n={n} a={a}: {format_qpoly(lhs - rhs)}"
    return ""


def check_trinom_counting(L: int) -> str:
    # at q = 1 the round bracket collapses to the three-step path count
    row = {0: 1}
    for _ in range(L):
        row = {
            a: row.get(a - 1, 0) + row.get(a, 0) + row.get(a + 1, 0)
            for a in range(-L, L + 1)
        }
    for a in range(-L, L + 1):
        for b in (0, 1):
            got = trinomial(L, b, a).eval_at_one()
            if got != row.get(a, 0):
                return f"a={a} b={b}: {got} != {row.get(a, 0)}"
    return ""


def check_ortho(L: int, family: str) -> str:
    for m in range(L + 1):
        want = QPoly.one() if L == m else QPoly.zero()
        for a in range(-L, L + 1):
            got = orthogonality_check(family, L, m, a)
            if got != want:
                return f"M={m} a={a}: {format_qpoly(got - want)}"
    return ""


def check_expand_tb(L: int, kind: str) -> str:
    n = 0 if kind == "T0" else 1
    for a in range(-L, L + 1):
        lhs = expand_trinomial_in_binomials(kind, L, a)
        rhs = t_n(n, L, a)
        if lhs != rhs:
            return f"a={a}: {format_qpoly(lhs - rhs)}"
    return ""


def check_expand_bt(L: int, kind: str) -> str:
    for a in range(-L, L + 1):
        lhs = expand_binomial_in_trinomials(kind, L, a)
        rhs = qbin(2 * L, L - a)
        if lhs != rhs:
            return f"a={a}: {format_qpoly(lhs - rhs)}"
    return ""


def check_even_arg(L: int) -> str:
    half = L // 2
    for n in (0, 1):
        for a in range(-half, half + 1):
            lhs = t_even_expansion(n, L, a)
            rhs = t_n(n, L, 2 * a)
            if lhs != rhs:
                return f"T n={n} a={a}: {format_qpoly(lhs - rhs)}"
    for b in range(-4, 5):
        for a in range(-half, half + 1):
            lhs = trinomial_even_expansion(L, b, a)
            rhs = trinomial(L, b, 2 * a)
            if lhs != rhs:
                return f"round b={b} a={a}: {format_qpoly(lhs - rhs)}"
    return ""


def check_t0_t1(L: int) -> str:
    for a in range(-L, L + 1):
        lhs, rhs = t0_t1_bridge(L, a)
        if lhs != rhs:
            return f"a={a}: {format_qpoly(lhs - rhs)}"
    return ""


def check_rederive(L: int) -> str:
    for a in range(-L, L + 1):
        lhs, rhs = rederive_binomial_expansion(L, a)
        if lhs != rhs:
            return f"a={a}: {format_qpoly(lhs - rhs)}"
    return ""


def check_bf(p: int, pp: int, lmax: int) -> str:
    for L in range(lmax + 1):
        f = fermionic(p, pp, L)
        b = bosonic(p, pp, L)
        if f != b:
            return f"L={L}: {format_qpoly(f - b)}"
    return ""


def check_rr(L: int) -> str:
    lhs, rhs_b, rhs_t = rr_check(L)
    if lhs != rhs_b:
        return f"binomial side: {format_qpoly(lhs - rhs_b)}"
    if lhs != rhs_t:
        return f"trinomial side: {format_qpoly(lhs - rhs_t)}"
    return ""


def check_bmo(L: int) -> str:
    lhs, rhs = bmo_check(L)
    if lhs != rhs:
        return format_qpoly(lhs - rhs)
    return ""


def check_bmo_companion(L: int) -> str:
    lhs, rhs = bmo_companion_check(L)
    if lhs != rhs:
        return format_qpoly(lhs - rhs)
    return ""


def check_gg(order4: int) -> str:
    lhs, rhs = gg_check(order4)
    if lhs != rhs:
        return format_qseries(lhs - rhs)
    return ""


def check_jtp(order4: int) -> str:
    lhs, rhs = jacobi_triple_check(order4)
    if lhs != rhs:
        return format_qseries(lhs - rhs)
    return ""


def check_prop(family: int, p: int, pp: int, lmax: int) -> str:
    for L in range(lmax + 1):
        lhs, rhs = prop_check(PropParams(family, p, pp, L))
        if lhs != rhs:
            return f"L={L}: {format_qpoly(lhs - rhs)}"
        if family in (1, 2):
            oracle = bosonic_binomial_transform(p, pp, L)
        elif family == 3:
            oracle = even_form(p, pp, L)
        else:
            oracle = even_dual_form(p, pp, L)
        if lhs != oracle:
            return f"L={L} oracle: {format_qpoly(lhs - oracle)}"
    return ""


def check_prop5(n: int, lmax: int) -> str:
    for L in range(lmax + 1):
        lhs, rhs = prop5_check(n, L)
        if lhs != rhs:
            return f"L={L}: {format_qpoly(lhs - rhs)}"
    return ""


def check_prop5_rr2(lmax: int) -> str:
    for L in range(lmax + 1):
        lhs5, rhs5 = prop5_check(1, L)
        lhs, rhs_b, rhs_t = rr_check(L)
        if not (lhs5 == lhs == rhs_b and rhs5 == rhs_t):
            return f"L={L}"
    return ""


def check_bailey_defining(m: int, seed: int) -> str:
    for a in ((1, 0), (1, 4), (-1, 4), (1, 8)):
        unit = unit_bailey_pair(a, m)
        bad = binomial_pair_defects(unit)
        if bad:
            return f"unit pair a={a}: defects at {bad}"
        rng = Random(f"{seed}:defrel:{a}")
        rnd = random_bailey_pair(a, m, rng)
        bad = binomial_pair_defects(rnd)
        if bad:
            return f"random pair a={a}: defects at {bad}"
    for n in (0, 1):
        rng = Random(f"{seed}:defrel:n{n}")
        tp = random_trinomial_pair(n, m, rng)
        bad = trinomial_pair_defects(tp)
        if bad:
            return f"trinomial pair n={n}: defects at {bad}"
    return ""


def check_bailey_lemma(
    label: str,
    a: tuple[int, int],
    rho1: tuple[int, int],
    rho2: tuple[int, int],
    m: int,
    seed: int,
) -> str:
    rng = Random(f"{seed}:lemma:{label}")
    pairs = [
        unit_bailey_pair(a, m),
        random_bailey_pair(a, m, rng),
        random_bailey_pair(a, m, rng),
    ]
    for i, pair in enumerate(pairs):
        lhs, rhs = bailey_lemma_sides(pair, rho1, rho2)
        if not ratio_equal(lhs, rhs):
            return f"pair {i}: {format_qpoly((lhs - rhs).num)}"
    return ""


def check_trinomial_lemma(n: int, m: int, seed: int) -> str:
    sides = trinomial_lemma0_sides if n == 0 else trinomial_lemma1_sides
    rng = Random(f"{seed}:tbl:{n}:{m}")
    for i in range(2):
        pair = random_trinomial_pair(n, m, rng)
        lhs, rhs = sides(pair)
        if not ratio_equal(lhs, rhs):
            return f"pair {i}: {format_qpoly((lhs - rhs).num)}"
    return ""


def check_column(mmax: int) -> str:
    for m in range(mmax + 1):
        for a in range(m + 1):
            lhs, rhs = telescoped_column_sides(a, m)
            if not ratio_equal(lhs, rhs):
                return f"a={a} M={m}: {format_qpoly((lhs - rhs).num)}"
    return ""


def check_transform(kind: str, m: int, count: int, seed: int) -> str:
    rng = Random(f"{seed}:xform:{kind}")
    for i in range(count):
        if kind in ("trin0", "trin1"):
            n = 0 if kind == "trin0" else 1
            tp = to_trinomial(random_bailey_pair((1, 0), m, rng), n)
            bad = trinomial_pair_defects(tp)
        elif kind in ("bin0", "bin1"):
            n = 0 if kind == "bin0" else 1
            bp = to_binomial(random_trinomial_pair(n, m, rng))
            bad = binomial_pair_defects(bp)
        elif kind == "embed":
            ell, n = i % 3, i % 4
            tp = even_embed(random_bailey_pair((1, 4 * ell), m, rng), n)
            bad = trinomial_pair_defects(tp)
        else:
            raise UsageError(f"unknown transform kind {kind!r}")
        if bad:
            return f"pair {i}: defects at {bad}"
    return ""


def check_roundtrip(m: int, seed: int) -> str:
    rng = Random(f"{seed}:roundtrip")
    for n in (0, 1):
        pair = random_bailey_pair((1, 0), m, rng)
        back = to_binomial(to_trinomial(pair, n))
        for L in range(m + 1):
            if not ratio_equal(back.alpha[L], pair.alpha[L]):
                return f"n={n} alpha_{L}"
            if not ratio_equal(back.beta[L], pair.beta[L]):
                return f"n={n} beta_{L}"
    return ""


def _t0_truncated(L: int, a: int, order4: int) -> QSeries:
    total = QSeries.zero(order4)
    for r in range((L - abs(a)) % 2, L - abs(a) + 1, 2):
        e4 = 2 * r * r
        if e4 > order4:
            break
        x = (L - a - r) // 2
        part = truncate(qbin(L, x), order4) * truncate(qbin(L - x, (L + a - r) // 2), order4)
        total = total + part * qmono(1, e4)
    return total


def _round_truncated(L: int, b: int, a: int, order4: int) -> QSeries:
    total = QSeries.zero(order4)
    for k in range(L + 1):
        e4 = 4 * k * (k + b)
        if e4 > order4 and k > abs(b):
            break
        part = truncate(qbin(L, k), order4) * truncate(qbin(L - k, k + a), order4)
        total = total + part * qmono(1, e4)
    return total


def _plateau(evaluate, L: int, step: int) -> QSeries | None:
    value = evaluate(L)
    return value if value == evaluate(L + step) else None


def check_t0_limit(parity: str, order4: int) -> str:
    # a binomial box k x (n-k) matches unrestricted partitions through
    # q^min(k, n-k), so every term is settled once L >= 2*order + |a| + 2
    want = t0_limit(parity, order4)
    for a in (0, 1):
        start = 2 * (order4 // 4) + a + 2
        if (start - a) % 2 != (0 if parity == "even" else 1):
            start += 1
        got = _plateau(lambda L: _t0_truncated(L, a, order4), start, 2)
        if got is None:
            return f"a={a}: not stable at L={start}"
        if got != want:
            return f"a={a}: {format_qseries(got - want)}"
    return ""


def check_round_limit(order4: int) -> str:
    # the limit statement is for the diagonal b = a
    want = trinomial_limit(order4)
    for a in (0, 1, 2, 3):
        start = order4 // 4 + max(a, 1) + 2
        got = _plateau(lambda L: _round_truncated(L, a, a, order4), start, 1)
        if got is None:
            return f"a={a}: not stable at L={start}"
        if got != want:
            return f"a={a}: {format_qseries(got - want)}"
    return ""


def check_qbin_limit(order4: int) -> str:
    for a in (0, 1, 2, 5):
        want = inverse_pochhammer_series(PochSpec(1, 4, a).factors(), order4)
        start = order4 // 4 + a + 2
        got = _plateau(lambda L: truncate(qbin(L, a), order4), start, 1)
        if got is None:
            return f"a={a}: not stable at L={start}"
        if got != want:
            return f"a={a}: {format_qseries(got - want)}"
    return ""


def check_rank_limit(n: int, order4: int) -> str:
    lhs, rhs = tainf_check(n, order4)
    if lhs != rhs:
        return format_qseries(lhs - rhs)
    return ""


def check_trivial_character(order4: int) -> str:
    got = character(2, 3, 1, 1, order4)
    if got != QSeries.one(order4):
        return format_qseries(got)
    return ""


CHECKS = {
    "appendix_box": check_appendix_box,
    "binom_recurrence": check_binom_recurrence,
    "binom_duality": check_binom_duality,
    "binom_newton": check_binom_newton,
    "binom_symmetry": check_binom_symmetry,
    "trinom_round_symmetry": check_trinom_round_symmetry,
    "trinom_t_symmetry": check_trinom_t_symmetry,
    "trinom_t_duality": check_trinom_t_duality,
    "trinom_counting": check_trinom_counting,
    "ortho": check_ortho,
    "expand_tb": check_expand_tb,
    "expand_bt": check_expand_bt,
    "even_arg": check_even_arg,
    "t0_t1": check_t0_t1,
    "rederive": check_rederive,
    "bf": check_bf,
    "rr": check_rr,
    "bmo": check_bmo,
    "bmo_companion": check_bmo_companion,
    "gg": check_gg,
    "jtp": check_jtp,
    "prop": check_prop,
    "prop5": check_prop5,
    "prop5_rr2": check_prop5_rr2,
    "bailey_defining": check_bailey_defining,
    "bailey_lemma": check_bailey_lemma,
    "trinomial_lemma": check_trinomial_lemma,
    "column": check_column,
    "transform": check_transform,
    "roundtrip": check_roundtrip,
    "t0_limit": check_t0_limit,
    "round_limit": check_round_limit,
    "qbin_limit": check_qbin_limit,
    "rank_limit": check_rank_limit,
    "trivial_character": check_trivial_character,
}

Case = tuple[str, str, dict[str, Any]]


# ---------------------------------------------------------------------------
# case builders


def _appendix_cases(o: SuiteOptions) -> list[Case]:
    lmax = 8 if o.lmax is None else o.lmax
    return [
        (
            f"appendix-{name.lower()}-l{L:02d}",
            "appendix_box",
            {"name": name, "L": L, "amax": lmax},
        )
        for name in APPENDIX_IDENTITIES
        for L in range(lmax + 1)
    ]


def _binom_cases(o: SuiteOptions) -> list[Case]:
    lmax = 30 if o.lmax is None else o.lmax
    out = []
    for tag, name in (
        ("rec", "binom_recurrence"),
        ("dual", "binom_duality"),
        ("newton", "binom_newton"),
        ("sym", "binom_symmetry"),
    ):
        out += [
            (f"binom-{tag}-l{L:02d}", name, {"L": L}) for L in range(lmax + 1)
        ]
    return out


def _trinom_cases(o: SuiteOptions) -> list[Case]:
    lmax = 10 if o.lmax is None else o.lmax
    out = []
    for tag, name in (
        ("rsym", "trinom_round_symmetry"),
        ("tsym", "trinom_t_symmetry"),
        ("tdual", "trinom_t_duality"),
        ("count", "trinom_counting"),
    ):
        out += [
            (f"trinom-{tag}-l{L:02d}", name, {"L": L}) for L in range(lmax + 1)
        ]
    return out


def _connect_cases(o: SuiteOptions) -> list[Case]:
    lmax = 12 if o.lmax is None else o.lmax
    out = []
    for fam in ("C", "D"):
        out += [
            (
                f"connect-ortho-{fam.lower()}-l{L:02d}",
                "ortho",
                {"L": L, "family": fam},
            )
            for L in range(lmax + 1)
        ]
    for kind in ("T0", "T1"):
        out += [
            (
                f"connect-tb-{kind.lower()}-l{L:02d}",
                "expand_tb",
                {"L": L, "kind": kind},
            )
            for L in range(lmax + 1)
        ]
        out += [
            (
                f"connect-bt-{kind.lower()}-l{L:02d}",
                "expand_bt",
                {"L": L, "kind": kind},
            )
            for L in range(lmax + 1)
        ]
    out += [
        (f"connect-even-l{L:02d}", "even_arg", {"L": L}) for L in range(lmax + 1)
    ]
    out += [
        (f"connect-bridge-l{L:02d}", "t0_t1", {"L": L})
        for L in range(1, lmax + 1)
    ]
    out += [
        (f"connect-rederive-l{L:02d}", "rederive", {"L": L})
        for L in range(lmax + 1)
    ]
    return out


def _virasoro_cases(o: SuiteOptions) -> list[Case]:
    lmax = 10 if o.lmax is None else o.lmax
    pairs = BF_PAIRS if o.p is None else ((o.p, o.pp),)
    out = [
        (
            f"virasoro-bf-p{p:02d}-pp{pp:02d}",
            "bf",
            {"p": p, "pp": pp, "lmax": lmax},
        )
        for p, pp in pairs
    ]
    if o.p is None:
        duals = sorted({(pp - p, pp) for p, pp in pairs if pp - p >= 2})
        out += [
            (
                f"virasoro-fdual-p{p:02d}-pp{pp:02d}",
                "bf",
                {"p": p, "pp": pp, "lmax": lmax},
            )
            for p, pp in duals
        ]
    return out


def _section3_cases(o: SuiteOptions) -> list[Case]:
    lmax = 30 if o.lmax is None else o.lmax
    bmo_lmax = min(lmax, 12)
    gg_order = 4 * (80 if o.order is None else o.order)
    jtp_order = 4 * (40 if o.order is None else o.order)
    out: list[Case] = [
        (f"section3-rr-l{L:02d}", "rr", {"L": L}) for L in range(lmax + 1)
    ]
    out += [
        (f"section3-bmo-l{L:02d}", "bmo", {"L": L}) for L in range(bmo_lmax + 1)
    ]
    out += [
        (f"section3-bmoc-l{L:02d}", "bmo_companion", {"L": L})
        for L in range(bmo_lmax + 1)
    ]
    out.append((f"section3-gg-o{gg_order // 4:03d}", "gg", {"order4": gg_order}))
    out.append(
        (f"section3-jtp-o{jtp_order // 4:03d}", "jtp", {"order4": jtp_order})
    )
    return out


def _family_accepts(family: int, p: int, pp: int) -> bool:
    try:
        PropParams(family, p, pp, 0)
    except ValueError:
        return False
    return True


def _props_cases(o: SuiteOptions) -> list[Case]:
    lmax = 8 if o.lmax is None else o.lmax
    out: list[Case] = []
    if o.n is None:
        for family in (1, 2, 3, 4):
            pairs = PROP_PAIRS[family] if o.p is None else ((o.p, o.pp),)
            for p, pp in pairs:
                if o.p is not None and not _family_accepts(family, p, pp):
                    continue
                out.append(
                    (
                        f"props-f{family}-p{p:02d}-pp{pp:02d}",
                        "prop",
                        {"family": family, "p": p, "pp": pp, "lmax": lmax},
                    )
                )
    if o.p is None:
        ranks = range(1, 6) if o.n is None else (o.n,)
        for n in ranks:
            out.append((f"props-f5-n{n}", "prop5", {"n": n, "lmax": lmax}))
        if o.n is None or o.n == 1:
            out.append(
                ("props-f5-rr2", "prop5_rr2", {"lmax": max(lmax, 20)})
            )
    return out


def _bailey_cases(o: SuiteOptions) -> list[Case]:
    lmax = 16 if o.lmax is None else o.lmax
    seed = o.seed
    out: list[Case] = [
        ("bailey-defrel", "bailey_defining", {"m": 6, "seed": seed})
    ]
    for label, a, rho1, rho2, m in LEMMA_SPECIALIZATIONS:
        out.append(
            (
                f"bailey-lemma-{label}",
                "bailey_lemma",
                {
                    "label": label,
                    "a": a,
                    "rho1": rho1,
                    "rho2": rho2,
                    "m": m,
                    "seed": seed,
                },
            )
        )
    for n in (0, 1):
        for m in (3, 6):
            out.append(
                (
                    f"bailey-tbl-n{n}-m{m}",
                    "trinomial_lemma",
                    {"n": n, "m": m, "seed": seed},
                )
            )
    out.append(("bailey-column", "column", {"mmax": 8}))
    out += [
        (f"bailey-bridge-l{L:02d}", "t0_t1", {"L": L})
        for L in range(1, lmax + 1)
    ]
    for kind, count in (
        ("trin0", 4),
        ("trin1", 4),
        ("bin0", 4),
        ("bin1", 4),
        ("embed", 6),
    ):
        out.append(
            (
                f"bailey-xform-{kind}",
                "transform",
                {"kind": kind, "m": 5, "count": count, "seed": seed},
            )
        )
    out.append(("bailey-roundtrip", "roundtrip", {"m": 5, "seed": seed}))
    return out


def _limits_cases(o: SuiteOptions) -> list[Case]:
    stab4 = 4 * (20 if o.order is None else o.order)
    rank4 = 4 * (30 if o.order is None else o.order)
    char4 = 4 * (40 if o.order is None else o.order)
    out: list[Case] = [
        ("limits-t0-even", "t0_limit", {"parity": "even", "order4": stab4}),
        ("limits-t0-odd", "t0_limit", {"parity": "odd", "order4": stab4}),
        ("limits-round", "round_limit", {"order4": stab4}),
        ("limits-qbin", "qbin_limit", {"order4": stab4}),
    ]
    ranks = range(1, 5) if o.n is None else (o.n,)
    out += [
        (f"limits-rank-n{n}", "rank_limit", {"n": n, "order4": rank4})
        for n in ranks
    ]
    out.append(
        ("limits-char23", "trivial_character", {"order4": char4})
    )
    return out


_BUILDERS = {
    "appendix": _appendix_cases,
    "binom": _binom_cases,
    "trinom": _trinom_cases,
    "connect": _connect_cases,
    "virasoro": _virasoro_cases,
    "section3": _section3_cases,
    "props": _props_cases,
    "bailey": _bailey_cases,
    "limits": _limits_cases,
}


def build_cases(suite: str, options: SuiteOptions) -> list[Case]:
    if suite == "all":
        out: list[Case] = []
        for name in SUITES[:-1]:
            out += _BUILDERS[name](options)
        return out
    builder = _BUILDERS.get(suite)
    if builder is None:
        raise UsageError(f"unknown suite {suite!r}")
    return builder(options)


# ---------------------------------------------------------------------------
# execution


def _json_safe(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_json_safe(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    return value


def _execute_case(case: Case) -> CaseResult:
    case_id, name, kwargs = case
    begin = perf_counter()
    try:
        detail = CHECKS[name](**kwargs)
        status = "pass" if not detail else "fail"
        detail = detail or ""
    except Exception as exc:
        status = "error"
        detail = f"{type(exc).__name__}: {exc}"
    millis = int((perf_counter() - begin) * 1000)
    return CaseResult(
        case_id=case_id,
        params=_json_safe(kwargs),
        status=status,
        millis=millis,
        detail=detail,
    )


def run_suite(suite: str, options: SuiteOptions | None = None) -> SuiteReport:
    options = options if options is not None else SuiteOptions()
    cases = build_cases(suite, options)
    if options.threads > 1:
        with ProcessPoolExecutor(max_workers=options.threads) as pool:
            results = list(pool.map(_execute_case, cases))
    else:
        results = [_execute_case(c) for c in cases]
    results.sort(key=lambda r: r.case_id)
    return SuiteReport(suite=suite, cases=tuple(results))
