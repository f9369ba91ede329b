"""Exact q-series engine: Gaussian and trinomial coefficients, connection
coefficient transforms, fermionic/bosonic character polynomials, Bailey
pairs, and a verification harness for the identity families built on them.
"""

from .qcore import (
    ExactDivisionError,
    FactoredRatio,
    QPoly,
    QSeries,
    SelfCheckError,
    ZeroFactorError,
    divide_exact_by_factor,
    euler_product,
    format_qpoly,
    format_qseries,
    qmono,
    ratio_equal,
    truncate,
)
from .qbinom import PochSpec, appendix_identity, poch, poch_general, qbin
from .qtrinom import t0_limit, t_n, trinomial, trinomial_limit
from .virasoro import (
    CFData,
    FermionicSpec,
    IncMatrix,
    bosonic,
    character,
    continued_fraction,
    fermionic,
    incidence,
    lattice_sum,
    rs_pair,
)
from .connect import (
    connection_coeff,
    expand_binomial_in_trinomials,
    expand_trinomial_in_binomials,
    orthogonality_check,
    t0_t1_bridge,
)
from .identities import PropParams, prop_check, prop5_check, rr_check
from .bailey import (
    BaileyPair,
    TrinomialBaileyPair,
    bailey_lemma_sides,
    even_embed,
    to_binomial,
    to_trinomial,
    unit_bailey_pair,
)
from .report import CaseResult, SuiteReport, emit_report
from .suites import SUITES, SuiteOptions, run_suite

__all__ = [
    "ExactDivisionError",
    "FactoredRatio",
    "QPoly",
    "QSeries",
    "SelfCheckError",
    "ZeroFactorError",
    "divide_exact_by_factor",
    "euler_product",
    "format_qpoly",
    "format_qseries",
    "qmono",
    "ratio_equal",
    "truncate",
    "PochSpec",
    "appendix_identity",
    "poch",
    "poch_general",
    "qbin",
    "t0_limit",
    "t_n",
    "trinomial",
    "trinomial_limit",
    "CFData",
    "FermionicSpec",
    "IncMatrix",
    "bosonic",
    "character",
    "continued_fraction",
    "fermionic",
    "incidence",
    "lattice_sum",
    "rs_pair",
    "connection_coeff",
    "expand_binomial_in_trinomials",
    "expand_trinomial_in_binomials",
    "orthogonality_check",
    "t0_t1_bridge",
    "PropParams",
    "prop_check",
    "prop5_check",
    "rr_check",
    "BaileyPair",
    "TrinomialBaileyPair",
    "bailey_lemma_sides",
    "even_embed",
    "to_binomial",
    "to_trinomial",
    "unit_bailey_pair",
    "CaseResult",
    "SuiteReport",
    "emit_report",
    "SUITES",
    "SuiteOptions",
    "run_suite",
]

__version__ = "0.1.0"
