"""Exact q-series engine.

Cauchy and Hahn polynomial families, homogeneous q-difference operators, and
a coefficientwise identity-verification suite over truncated formal power
series with exact rational arithmetic.
"""

from qhahn._version import __version__
from qhahn.errors import (
    DenominatorPole,
    DomainError,
    MissingAssignment,
    NonConvergent,
    NonTerminating,
    NotDivisible,
    NotInvertible,
    QhahnError,
    UnknownCheck,
)
from qhahn.qkernel import (
    Rational,
    format_rational,
    gauss_power,
    q_binomial,
    q_factorial,
    q_number,
    q_pochhammer,
    rational,
)
from qhahn.polyring import Monomial, Polynomial, divide_exact
from qhahn.pseries import (
    ScaledMonomial,
    TruncatedSeries,
    euler_product,
    euler_recip,
    phi_series,
    pochhammer_poly,
)
from qhahn.families import (
    cauchy_p,
    cauchy_p_general,
    cauchy_product,
    cauchy_symmetry_check,
    hahn_h,
    hahn_psi,
    shifted_symmetry_check,
    trivariate_f,
)
from qhahn.qoperators import (
    OperatorSpec,
    apply_operator,
    dq,
    dq_power,
    e_tilde,
    l_operator,
    l_tilde,
    leibniz_expansion,
    r_operator,
    theta,
    theta_power,
    theta_power_on_cauchy,
)
from qhahn.numeric import (
    CertifiedValue,
    cauchy_tail_bound,
    phi_numeric,
    qpochhammer_inf,
)
from qhahn.verify import (
    CheckConfig,
    CheckResult,
    default_configs,
    registered_checks,
    run_check,
    run_suite,
)

__all__ = [
    "__version__",
    # errors
    "QhahnError",
    "NotDivisible",
    "NotInvertible",
    "NonTerminating",
    "DenominatorPole",
    "MissingAssignment",
    "DomainError",
    "NonConvergent",
    "UnknownCheck",
    # scalars
    "Rational",
    "rational",
    "format_rational",
    "q_pochhammer",
    "q_number",
    "q_factorial",
    "q_binomial",
    "gauss_power",
    # polynomials and series
    "Monomial",
    "Polynomial",
    "divide_exact",
    "ScaledMonomial",
    "TruncatedSeries",
    "pochhammer_poly",
    "euler_recip",
    "euler_product",
    "phi_series",
    # families
    "cauchy_product",
    "cauchy_p",
    "cauchy_p_general",
    "hahn_h",
    "hahn_psi",
    "trivariate_f",
    "cauchy_symmetry_check",
    "shifted_symmetry_check",
    # operators
    "OperatorSpec",
    "dq",
    "dq_power",
    "theta",
    "theta_power",
    "theta_power_on_cauchy",
    "e_tilde",
    "r_operator",
    "l_tilde",
    "l_operator",
    "apply_operator",
    "leibniz_expansion",
    # numerics
    "CertifiedValue",
    "qpochhammer_inf",
    "phi_numeric",
    "cauchy_tail_bound",
    # suite
    "CheckConfig",
    "CheckResult",
    "default_configs",
    "registered_checks",
    "run_check",
    "run_suite",
]
