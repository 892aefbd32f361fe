"""The identity registry: every check builds both sides independently.

Left sides come from the family constructors and operator applications; right
sides come from the Euler/phi series expanders (plus explicit homogenized
sums where a ratio parameter appears).  No check computes one side from the
other.  Exact checks compare truncated-series term maps literally and report
the graded-lex-first discrepancy as a witness; the numeric check compares
certified intervals.

Ratio-valued parameters are never represented directly: every occurrence is
rewritten through the homogenization (w/z;q)_n z^n = prod_{j<n}(z - q^j w)
before any series arithmetic, so the coefficient ring stays polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from qhahn.families import cauchy_p, cauchy_p_general, cauchy_product, hahn_h
from qhahn.numeric import cauchy_tail_bound, phi_numeric, qpochhammer_inf
from qhahn.polyring import Monomial, Polynomial, grlex_key
from qhahn.pseries import (
    ScaledMonomial,
    TruncatedSeries,
    euler_product,
    euler_recip,
    phi_series,
    pochhammer_poly,
)
from qhahn.qkernel import gauss_power, q_binomial, q_pochhammer
from qhahn.qoperators import (
    apply_operator,
    dq_power,
    e_tilde,
    l_tilde,
    leibniz_expansion,
    r_operator,
)

_F0 = Fraction(0)
_F1 = Fraction(1)
_ZERO_EXPS = (0, 0, 0, 0, 0, 0)

_X = Polynomial.variable("x")
_Y = Polynomial.variable("y")

_XT = ScaledMonomial.of(1, x=1, t=1)
_XS = ScaledMonomial.of(1, x=1, s=1)
_YT = ScaledMonomial.of(1, y=1, t=1)
_YS = ScaledMonomial.of(1, y=1, s=1)
_UXT = ScaledMonomial.of(1, u=1, x=1, t=1)
_VXT = ScaledMonomial.of(1, v=1, x=1, t=1)
_Y_MONO = ScaledMonomial.of(1, y=1)
_T_MONO = ScaledMonomial.of(1, t=1)

# Test-only hook: added to the family parameter b on the left side of
# C14a.h_gf so the mutation-sensitivity test can prove the comparator is not
# vacuous.  Always zero in normal runs.
_LHS_B_PERTURBATION = Fraction(0)

_PARAM_DEFAULTS = {
    "a": Fraction(1, 7),
    "b": Fraction(1, 3),
    "alpha": Fraction(2, 5),
    "c": Fraction(3, 7),
    "d": Fraction(1, 5),
    "v": Fraction(3, 8),
    "x": Fraction(1, 3),
    "y": Fraction(1, 5),
    "t": Fraction(1, 2),
}

NUMERIC_EPS = Fraction(1, 10**30)
NUMERIC_PARTIAL_TERMS = 40


@dataclass(frozen=True)
class Witness:
    """First discrepancy of a failed comparison."""

    monomial: tuple
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    part: str = ""


def poly_witness(lhs: Polynomial, rhs: Polynomial, part: str = "") -> Optional[Witness]:
    diff = lhs - rhs
    if diff.is_zero():
        return None
    exps = min(diff.terms, key=grlex_key)
    return Witness(exps, lhs.coeff(exps), rhs.coeff(exps), part)


def series_witness(
    lhs: TruncatedSeries, rhs: TruncatedSeries, part: str = ""
) -> Optional[Witness]:
    cap_t = min(lhs.cap_t, rhs.cap_t)
    cap_s = min(lhs.cap_s, rhs.cap_s)
    return poly_witness(
        lhs.body.truncate(cap_t, cap_s), rhs.body.truncate(cap_t, cap_s), part
    )


def scalar_witness(lhs, rhs, part: str = "") -> Optional[Witness]:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    if lhs == rhs:
        return None
    return Witness(_ZERO_EXPS, lhs, rhs, part)


def _param(config, name: str) -> Fraction:
    return Fraction(config.params.get(name, _PARAM_DEFAULTS[name]))


def _qq(q: Fraction, n: int) -> Fraction:
    return q_pochhammer(q, q, n)


def _tpow(n: int) -> Polynomial:
    return Polynomial.monomial(Monomial.of(t=n))


def _spow(n: int) -> Polynomial:
    return Polynomial.monomial(Monomial.of(s=n))


def _phi_1_1(a, z: ScaledMonomial, q, cap_t: int, cap_s: int) -> TruncatedSeries:
    """sum_m (-1)^m q^(m 2) (a;q)_m z^m/(q;q)_m, the one-zero-parameter phi."""
    return phi_series([Fraction(a)], [_F0], q, z, cap_t, cap_s)


def _inverse_poch_chain(w: ScaledMonomial, q, cap_t: int, cap_s: int, count: int):
    """[1/(w;q)_k as a series for k = 0..count], built incrementally."""
    chain = [TruncatedSeries.one(cap_t, cap_s)]
    power = _F1
    for _ in range(count):
        factor = TruncatedSeries(
            Polynomial.one() - w.scaled(power).as_polynomial(), cap_t, cap_s
        )
        chain.append(chain[-1] * factor.invert())
        power *= q
    return chain


# ---------------------------------------------------------------------------
# C1 - C7: series kernel and q-derivative identities
# ---------------------------------------------------------------------------


def check_euler_pair(config) -> Optional[Witness]:
    """(xt;q)_inf * 1/(xt;q)_inf = 1."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    lhs = euler_product(_XT, q, nt, ns) * euler_recip(_XT, q, nt, ns)
    return series_witness(lhs, TruncatedSeries.one(nt, ns))


def check_q_binomial_theorem(config) -> Optional[Witness]:
    """1Phi0(a;-|q;xt) = (a*xt;q)_inf / (xt;q)_inf."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    lhs = phi_series([a], [], q, _XT, nt, ns)
    rhs = euler_product(_XT.scaled(a), q, nt, ns) * euler_recip(_XT, q, nt, ns)
    return series_witness(lhs, rhs)


def check_cauchy_gf(config) -> Optional[Witness]:
    """sum_n p_n(x,y) t^n/(q;q)_n = (yt;q)_inf / (xt;q)_inf."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    body = Polynomial.zero()
    for n in range(nt + 1):
        body = body + (cauchy_p(n, q) * _tpow(n)).scale(_F1 / _qq(q, n))
    lhs = TruncatedSeries(body, nt, ns)
    rhs = euler_product(_YT, q, nt, ns) * euler_recip(_XT, q, nt, ns)
    return series_witness(lhs, rhs)


def check_cauchy_symmetry(config) -> Optional[Witness]:
    """Both reversal symmetries of p_n(x,y), for n <= 8 and k <= n."""
    q = config.q
    for n in range(9):
        lhs = cauchy_p(n, q)
        rhs = cauchy_product(n, q, _Y, _X.scale(q ** (1 - n))).scale(
            (-1) ** n * gauss_power(n, q)
        )
        witness = poly_witness(lhs, rhs, part=f"reversal n={n}")
        if witness:
            return witness
        for k in range(n + 1):
            lhs = cauchy_product(n - k, q, _X, _Y.scale(q ** (1 - n)))
            scale = (-1) ** (n - k) * gauss_power(k, q) / gauss_power(n, q)
            rhs = cauchy_product(n - k, q, _Y, _X.scale(q**k)).scale(scale)
            witness = poly_witness(lhs, rhs, part=f"shifted reversal n={n} k={k}")
            if witness:
                return witness
    return None


def _random_x_poly(rng: random.Random) -> Polynomial:
    terms = {}
    for power in range(5):
        coeff = rng.randint(-9, 9)
        if coeff:
            terms[(power, 0, 0, 0, 0, 0)] = coeff
    return Polynomial(terms)


def check_leibniz(config) -> Optional[Witness]:
    """q-Leibniz rule for D_q^n{f g} on 100 seeded random pairs, n <= 4."""
    q = config.q
    rng = random.Random(config.seed)
    for trial in range(100):
        f = _random_x_poly(rng)
        g = _random_x_poly(rng)
        product = f * g
        for n in range(5):
            lhs = dq_power(product, "x", q, n)
            rhs = leibniz_expansion(f, g, "x", q, n)
            witness = poly_witness(lhs, rhs, part=f"pair {trial} order {n}")
            if witness:
                return witness
    return None


def check_vandermonde_aux(config) -> Optional[Witness]:
    """(q^(n+m-k+1);q)_k as a q-binomial convolution, for n, m, k <= 5."""
    q = config.q
    for n in range(6):
        for m in range(6):
            for k in range(6):
                lhs = q_pochhammer(q ** (n + m - k + 1), q, k)
                rhs = _F0
                for j in range(k + 1):
                    rhs += (
                        q_binomial(k, j, q)
                        * q ** (j * (j - k + m))
                        * q_pochhammer(q ** (n - j + 1), q, j)
                        * q_pochhammer(q ** (m - k + j + 1), q, k - j)
                    )
                witness = scalar_witness(lhs, rhs, part=f"n={n} m={m} k={k}")
                if witness:
                    return witness
    return None


def check_dq_closed_forms(config) -> Optional[Witness]:
    """D_q^n x^k = (q^(k-n+1);q)_n x^(k-n), and
    D_q^n (xt;q)_inf = (-1)^n q^(n 2) t^n (xt;q)_inf/(xt;q)_n."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    for k in range(7):
        for n in range(7):
            lhs = dq_power(_X**k, "x", q, n)
            factor = q_pochhammer(q ** (k - n + 1), q, n)
            rhs = (_X ** max(k - n, 0)).scale(factor)
            witness = poly_witness(lhs, rhs, part=f"power rule k={k} n={n}")
            if witness:
                return witness
    product = euler_product(_XT, q, nt, ns)
    for n in range(5):
        lhs = dq_power(product, "x", q, n)
        scale = (-1) ** n * gauss_power(n, q)
        inverse = TruncatedSeries(
            pochhammer_poly(_XT, q, n), nt, ns
        ).invert()
        rhs = product * inverse * _tpow(n).scale(scale)
        witness = series_witness(lhs, rhs, part=f"product rule n={n}")
        if witness:
            return witness
    return None


def check_dq_phi(config) -> Optional[Witness]:
    """D_q^n of the one-parameter phi in its argument variable, via the shift
    a -> a q^n, argument -> argument q^n closed form (argument realized on t)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    b = _param(config, "b")
    base = _phi_1_1(a, ScaledMonomial.of(b, t=1), q, nt, ns)
    for n in range(4):
        lhs = dq_power(base, "t", q, n).truncate(nt - n, ns)
        scale = (-1) ** n * b**n * q_pochhammer(a, q, n) * gauss_power(n, q)
        rhs = (
            _phi_1_1(a * q**n, ScaledMonomial.of(b * q**n, t=1), q, nt - n, ns)
            * scale
        )
        witness = series_witness(lhs, rhs, part=f"order n={n}")
        if witness:
            return witness
    return None


# ---------------------------------------------------------------------------
# C8: actions of the one-parameter q-shift operator
# ---------------------------------------------------------------------------


def check_r_actions(config) -> Optional[Witness]:
    """Three actions of the a = 0 operator on Euler-product ratios, plus the
    resulting series transformation; the free parameter v is specialized to
    v0 * t so both sides truncate."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    v0 = _param(config, "v")
    operator = r_operator(_Y_MONO, q, "x")
    double = euler_recip(_XT, q, nt, ns) * euler_recip(_XS, q, nt, ns)
    inv_ys = _inverse_poch_chain(_YS, q, nt, ns, nt)

    # inner 1Phi1(xs; ys | q; yt), shared by the first action and the
    # transformation below
    phi_inner = TruncatedSeries.zero(nt, ns)
    for m in range(nt + 1):
        weight = (-1) ** m * gauss_power(m, q) / _qq(q, m)
        phi_inner = phi_inner + (
            inv_ys[m]
            * pochhammer_poly(_XS, q, m)
            * _YT.power_poly(m).scale(weight)
        )

    lhs_double = apply_operator(operator, double)
    rhs = euler_product(_YS, q, nt, ns) * double * phi_inner
    witness = series_witness(lhs_double, rhs, part="action on double product")
    if witness:
        return witness

    # action with the extra (v0*x*t;q)_inf factor
    lhs = apply_operator(
        operator, euler_product(_XT.scaled(v0), q, nt, ns) * double
    )
    prefactor = euler_product(_YS, q, nt, ns) * euler_recip(_XS, q, nt, ns)
    total = TruncatedSeries.zero(nt, ns)
    for n in range(nt + 1):
        weight = q_pochhammer(v0, q, n) / _qq(q, n)
        total = total + (
            inv_ys[n] * (cauchy_p(n, q) * _tpow(n)).scale(weight)
        )
    witness = series_witness(lhs, prefactor * total, part="action with extra factor")
    if witness:
        return witness

    # the same action at v0 = 0, stated on its own
    total0 = TruncatedSeries.zero(nt, ns)
    for n in range(nt + 1):
        total0 = total0 + (
            inv_ys[n] * (cauchy_p(n, q) * _tpow(n)).scale(_F1 / _qq(q, n))
        )
    witness = series_witness(
        lhs_double, prefactor * total0, part="action at v0=0"
    )
    if witness:
        return witness

    # transformation: the homogenized 2Phi1 equals recip(xt) * 1Phi1(xs;ys|q;yt)
    lhs_transform = total0
    rhs_transform = euler_recip(_XT, q, nt, ns) * phi_inner
    return series_witness(lhs_transform, rhs_transform, part="transformation")


# ---------------------------------------------------------------------------
# C9 - C12: two-parameter q-derivative operator and the Cauchy family
# ---------------------------------------------------------------------------


def _pgen_gf_rhs(config) -> TruncatedSeries:
    """1/(xt;q)_inf * 1Phi1(a; 0 | q; yt)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    return euler_recip(_XT, q, nt, ns) * _phi_1_1(a, _YT, q, nt, ns)


def check_e_on_single_product(config) -> Optional[Witness]:
    """E(a,y) on 1/(xt;q)_inf reproduces the phi-weighted product."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    lhs = apply_operator(e_tilde(a, _Y_MONO, q, "x"), euler_recip(_XT, q, nt, ns))
    return series_witness(lhs, _pgen_gf_rhs(config))


def _pgen_rogers_rhs(config) -> TruncatedSeries:
    """1/((xt,xs;q)_inf) * sum_n (-1)^n q^(n 2) (a;q)_n (sy)^n/(q;q)_n
    * sum_m (-1)^m q^(m 2) (a q^n;q)_m (xs;q)_m (ytq^n)^m/(q;q)_m.

    The inner series carries the full sign/q-power weight (its two lower
    parameters are both zero)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    total = TruncatedSeries.zero(nt, ns)
    sy = ScaledMonomial.of(1, s=1, y=1)
    for n in range(ns + 1):
        inner = Polynomial.zero()
        for m in range(nt + 1):
            weight = (
                (-1) ** m
                * gauss_power(m, q)
                * q_pochhammer(a * q**n, q, m)
                * q ** (n * m)
                / _qq(q, m)
            )
            inner = inner + (
                pochhammer_poly(_XS, q, m) * _YT.power_poly(m)
            ).scale(weight)
        outer = (-1) ** n * gauss_power(n, q) * q_pochhammer(a, q, n) / _qq(q, n)
        total = total + TruncatedSeries(
            inner * sy.power_poly(n).scale(outer), nt, ns
        )
    return (
        euler_recip(_XT, q, nt, ns) * euler_recip(_XS, q, nt, ns) * total
    )


def check_e_on_double_product(config) -> Optional[Witness]:
    """E(a,y) on 1/((xt,xs;q)_inf)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    operand = euler_recip(_XT, q, nt, ns) * euler_recip(_XS, q, nt, ns)
    lhs = apply_operator(e_tilde(a, _Y_MONO, q, "x"), operand)
    return series_witness(lhs, _pgen_rogers_rhs(config))


def _pgen_ext_rhs(config, k: int) -> TruncatedSeries:
    """Extended right side with the terminating homogenized inner sum:

    1/(xt;q)_inf * sum_n (-1)^n q^(n 2) (a;q)_n (ty)^n/(q;q)_n
      * sum_{m<=k} (q^-k;q)_m (aq^n;q)_m (xt;q)_m q^((n+k)m) x^(k-m) y^m/(q;q)_m
    """
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    ty = ScaledMonomial.of(1, t=1, y=1)
    total = TruncatedSeries.zero(nt, ns)
    for n in range(nt + 1):
        inner = Polynomial.zero()
        for m in range(k + 1):
            weight = (
                q_pochhammer(q ** (-k), q, m)
                * q_pochhammer(a * q**n, q, m)
                * q ** ((n + k) * m)
                / _qq(q, m)
            )
            inner = inner + (
                pochhammer_poly(_XT, q, m) * _X ** (k - m) * _Y**m
            ).scale(weight)
        outer = (-1) ** n * gauss_power(n, q) * q_pochhammer(a, q, n) / _qq(q, n)
        total = total + TruncatedSeries(inner * ty.power_poly(n).scale(outer), nt, ns)
    return euler_recip(_XT, q, nt, ns) * total


def check_e_on_power_product(config) -> Optional[Witness]:
    """E(a,y) on x^k/(xt;q)_inf for k <= 3; k = 0 collapses to the single
    product action."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    operator = e_tilde(a, _Y_MONO, q, "x")
    recip = euler_recip(_XT, q, nt, ns)
    for k in range(4):
        lhs = apply_operator(operator, recip * _X**k)
        rhs = _pgen_ext_rhs(config, k)
        witness = series_witness(lhs, rhs, part=f"shift k={k}")
        if witness:
            return witness
    witness = series_witness(
        _pgen_ext_rhs(config, 0), _pgen_gf_rhs(config), part="k=0 collapse"
    )
    return witness


def check_e_triple_sum(config) -> Optional[Witness]:
    """E(a,t) acting on s applied to the phi-weighted product ratio equals the
    explicit triple sum (with the monomial factors b^n y^k x^j and the sign
    (-1)^j carried by the summand)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    b = _param(config, "b")
    # The operator differentiates the series variable s, and each application
    # consumes one order of s-accuracy; pad the operand so every reported
    # coefficient up to (nt, ns) is exact.
    pad = ns + nt
    operand = (
        euler_product(_YS, q, nt, pad)
        * euler_recip(_XS, q, nt, pad)
        * _phi_1_1(a, ScaledMonomial.of(b, s=1), q, nt, pad)
    )
    lhs = apply_operator(e_tilde(a, _T_MONO, q, "s"), operand).truncate(nt, ns)
    prefactor = euler_product(_YS, q, nt, ns) * euler_recip(_XS, q, nt, ns)

    inv_ys = _inverse_poch_chain(_YS, q, nt, ns, nt)
    phi_cache: dict = {}
    total = TruncatedSeries.zero(nt, ns)
    for n in range(nt + 1):
        for k in range(nt + 1 - n):
            for j in range(nt + 1 - n - k):
                order = n + j + k
                key = (n, order)
                inner = phi_cache.get(key)
                if inner is None:
                    inner = _phi_1_1(
                        a * q**n,
                        ScaledMonomial.of(b * q**order, s=1),
                        q,
                        nt,
                        ns,
                    )
                    phi_cache[key] = inner
                weight = (
                    Fraction((-1) ** j)
                    * gauss_power(n, q)
                    * gauss_power(k, q)
                    * gauss_power(order, q)
                    * q_pochhammer(a, q, n)
                    * q_pochhammer(a, q, order)
                    * b**n
                    / (_qq(q, k) * _qq(q, n) * _qq(q, j))
                )
                piece = (
                    pochhammer_poly(_XS, q, k)
                    * _Y**k
                    * _X**j
                    * _tpow(order)
                ).scale(weight)
                total = total + inner * inv_ys[k] * piece
    return series_witness(lhs, prefactor * total)


def check_pgen_gf(config) -> Optional[Witness]:
    """sum_n p_n(x,y,a) t^n/(q;q)_n = 1/(xt;q)_inf * 1Phi1(a;0|q;yt)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    body = Polynomial.zero()
    for n in range(nt + 1):
        body = body + (cauchy_p_general(n, q, a) * _tpow(n)).scale(_F1 / _qq(q, n))
    return series_witness(TruncatedSeries(body, nt, ns), _pgen_gf_rhs(config))


def check_pgen_ext(config) -> Optional[Witness]:
    """sum_n p_{n+k}(x,y,a) t^n/(q;q)_n against the extended right side,
    k <= 3; k = 0 collapses to the plain generating function."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    for k in range(4):
        body = Polynomial.zero()
        for n in range(nt + 1):
            body = body + (
                cauchy_p_general(n + k, q, a) * _tpow(n)
            ).scale(_F1 / _qq(q, n))
        witness = series_witness(
            TruncatedSeries(body, nt, ns), _pgen_ext_rhs(config, k), part=f"shift k={k}"
        )
        if witness:
            return witness
    return series_witness(
        _pgen_ext_rhs(config, 0), _pgen_gf_rhs(config), part="k=0 collapse"
    )


def check_pgen_rogers(config) -> Optional[Witness]:
    """Double generating function sum_{n,m} p_{n+m}(x,y,a) t^n s^m /
    ((q;q)_n (q;q)_m) against the bivariate right side."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    body = Polynomial.zero()
    for n in range(nt + 1):
        for m in range(ns + 1):
            weight = _F1 / (_qq(q, n) * _qq(q, m))
            body = body + (
                cauchy_p_general(n + m, q, a) * _tpow(n) * _spow(m)
            ).scale(weight)
    return series_witness(TruncatedSeries(body, nt, ns), _pgen_rogers_rhs(config))


def check_pgen_mehler(config) -> Optional[Witness]:
    """Diagonal bilinear sum over two generalized Cauchy families equals
    E(a,y) applied to 1/(uxt;q)_inf * 1Phi1(alpha;0|q;vxt)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    alpha = _param(config, "alpha")
    body = Polynomial.zero()
    for n in range(nt + 1):
        pair = cauchy_p_general(n, q, a) * cauchy_p_general(n, q, alpha, "u", "v")
        body = body + (pair * _tpow(n)).scale(_F1 / _qq(q, n))
    lhs = TruncatedSeries(body, nt, ns)
    operand = euler_recip(_UXT, q, nt, ns) * _phi_1_1(alpha, _VXT, q, nt, ns)
    rhs = apply_operator(e_tilde(a, _Y_MONO, q, "x"), operand)
    return series_witness(lhs, rhs)


def check_e_on_power(config) -> Optional[Witness]:
    """E(a,y){x^n} = p_n(x,y,a) for n <= 8."""
    q = config.q
    a = _param(config, "a")
    operator = e_tilde(a, _Y_MONO, q, "x")
    for n in range(9):
        witness = poly_witness(
            apply_operator(operator, _X**n),
            cauchy_p_general(n, q, a),
            part=f"degree n={n}",
        )
        if witness:
            return witness
    return None


# ---------------------------------------------------------------------------
# C13 - C14: divided-difference operator and the Hahn family
# ---------------------------------------------------------------------------


def _product_ratio(config) -> TruncatedSeries:
    """(xt;q)_inf / (yt;q)_inf."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    return euler_product(_XT, q, nt, ns) * euler_recip(_YT, q, nt, ns)


def check_l_on_prod(config) -> Optional[Witness]:
    """L(a,b) termwise on (xt;q)_inf/(yt;q)_inf multiplies it by
    1Phi1(a;0|q;bt)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    b = _param(config, "b")
    ratio = _product_ratio(config)
    lhs = apply_operator(l_tilde(a, b, q), ratio)
    rhs = ratio * _phi_1_1(a, ScaledMonomial.of(b, t=1), q, nt, ns)
    return series_witness(lhs, rhs)


def check_l_on_cauchy(config) -> Optional[Witness]:
    """L(a,b){p_n(y,x)} = h_n(x,y,a,b|q) for n <= 8."""
    q = config.q
    a = _param(config, "a")
    b = _param(config, "b")
    operator = l_tilde(a, b, q)
    for n in range(9):
        witness = poly_witness(
            apply_operator(operator, cauchy_product(n, q, _Y, _X)),
            hahn_h(n, q, a, b),
            part=f"degree n={n}",
        )
        if witness:
            return witness
    return None


def _h_gf_rhs(config) -> TruncatedSeries:
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    b = _param(config, "b")
    return _product_ratio(config) * _phi_1_1(
        a, ScaledMonomial.of(b, t=1), q, nt, ns
    )


def check_h_gf(config) -> Optional[Witness]:
    """sum_n h_n(x,y,a,b|q) t^n/(q;q)_n = (xt;q)_inf/(yt;q)_inf
    * 1Phi1(a;0|q;bt)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    b = _param(config, "b") + _LHS_B_PERTURBATION
    body = Polynomial.zero()
    for n in range(nt + 1):
        body = body + (hahn_h(n, q, a, b) * _tpow(n)).scale(_F1 / _qq(q, n))
    return series_witness(TruncatedSeries(body, nt, ns), _h_gf_rhs(config))


def check_h_ext(config) -> Optional[Witness]:
    """sum_n h_{n+k} t^n/(q;q)_n = L(a,b){p_k(y,x) (xt;q)_inf /
    ((xt;q)_k (yt;q)_inf)} for k <= 3; k = 0 collapses to the plain
    generating function."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    b = _param(config, "b")
    operator = l_tilde(a, b, q)
    rhs_k0 = None
    for k in range(4):
        body = Polynomial.zero()
        for n in range(nt + 1):
            body = body + (hahn_h(n + k, q, a, b) * _tpow(n)).scale(_F1 / _qq(q, n))
        lhs = TruncatedSeries(body, nt, ns)
        operand = (
            _product_ratio(config)
            * TruncatedSeries(pochhammer_poly(_XT, q, k), nt, ns).invert()
            * cauchy_product(k, q, _Y, _X)
        )
        rhs = apply_operator(operator, operand)
        if k == 0:
            rhs_k0 = rhs
        witness = series_witness(lhs, rhs, part=f"shift k={k}")
        if witness:
            return witness
    return series_witness(rhs_k0, _h_gf_rhs(config), part="k=0 collapse")


def check_h_rogers(config) -> Optional[Witness]:
    """Double generating function for h_{n+m} against both closed forms, and
    the two closed forms against each other (ratio parameters homogenized
    through the Cauchy products)."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    b = _param(config, "b")
    operator = l_tilde(a, b, q)

    body = Polynomial.zero()
    for n in range(nt + 1):
        for m in range(ns + 1):
            weight = _F1 / (_qq(q, n) * _qq(q, m))
            body = body + (
                hahn_h(n + m, q, a, b) * _tpow(n) * _spow(m)
            ).scale(weight)
    lhs = TruncatedSeries(body, nt, ns)

    inv_xs = _inverse_poch_chain(_XS, q, nt, ns, nt)
    sum_one = TruncatedSeries.zero(nt, ns)
    for n in range(nt + 1):
        sum_one = sum_one + (
            inv_xs[n]
            * (cauchy_product(n, q, _Y, _X) * _tpow(n)).scale(_F1 / _qq(q, n))
        )
    operand_one = (
        euler_product(_XS, q, nt, ns) * euler_recip(_YS, q, nt, ns) * sum_one
    )
    rhs_one = apply_operator(operator, operand_one)
    witness = series_witness(lhs, rhs_one, part="first closed form")
    if witness:
        return witness

    sum_two = TruncatedSeries.zero(nt, ns)
    for m in range(nt + 1):
        weight = (-1) ** m * gauss_power(m, q) / _qq(q, m)
        sum_two = sum_two + (
            inv_xs[m]
            * pochhammer_poly(_YS, q, m)
            * _XT.power_poly(m).scale(weight)
        )
    operand_two = (
        euler_product(_XS, q, nt, ns)
        * euler_recip(_YT, q, nt, ns)
        * euler_recip(_YS, q, nt, ns)
        * sum_two
    )
    rhs_two = apply_operator(operator, operand_two)
    witness = series_witness(lhs, rhs_two, part="second closed form")
    if witness:
        return witness
    return series_witness(rhs_one, rhs_two, part="closed forms agree")


def _hahn_reversed(n: int, q, c, d, xvar: str = "u", yvar: str = "v") -> Polynomial:
    """The reversed-weight companion of h_n: the k-th summand carries both the
    weight (c;q)_k d^k and the degree-k Cauchy product (instead of degree
    n-k).  This is the family the displayed bilinear closed form actually
    generates; see check_h_mehler."""
    xp = Polynomial.variable(xvar)
    yp = Polynomial.variable(yvar)
    total = Polynomial.zero()
    for k in range(n + 1):
        weight = (
            q_binomial(n, k, q)
            * (-1) ** k
            * gauss_power(k, q)
            * Fraction(d) ** k
            * q_pochhammer(c, q, k)
        )
        total = total + cauchy_product(k, q, yp, xp).scale(weight)
    return total


def check_h_mehler(config) -> Optional[Witness]:
    """Diagonal bilinear sum over two Hahn families against L(a,b) applied to
    (xt;q)_inf/(yt;q)_inf times the homogenized three-parameter phi.

    The closed form is verified first against the bilinear sum with the
    reversed-weight companion as second factor, which it does equal
    coefficientwise (this guards the right side's construction).  The
    diagonal comparison itself then fails at order t with a rational
    witness: the closed form and the diagonal sum genuinely differ, and the
    check reports that rather than hiding it."""
    q, nt, ns = config.q, config.cap_t, config.cap_s
    a = _param(config, "a")
    b = _param(config, "b")
    c = _param(config, "c")
    d = _param(config, "d")

    u_poly = Polynomial.variable("u")
    v_poly = Polynomial.variable("v")
    inv_xt = _inverse_poch_chain(_XT, q, nt, ns, nt)
    phi_sum = TruncatedSeries.zero(nt, ns)
    for n in range(nt + 1):
        weight = (
            Fraction((-1) ** n)
            * gauss_power(n, q)
            * q_pochhammer(c, q, n)
            * d**n
            / _qq(q, n)
        )
        piece = (
            cauchy_product(n, q, _Y, _X)
            * cauchy_product(n, q, v_poly, u_poly)
            * _tpow(n)
        ).scale(weight)
        phi_sum = phi_sum + inv_xt[n] * piece
    operand = _product_ratio(config) * phi_sum
    rhs = apply_operator(l_tilde(a, b, q), operand)

    companion_body = Polynomial.zero()
    for n in range(nt + 1):
        pair = hahn_h(n, q, a, b) * _hahn_reversed(n, q, c, d)
        companion_body = companion_body + (pair * _tpow(n)).scale(_F1 / _qq(q, n))
    witness = series_witness(
        TruncatedSeries(companion_body, nt, ns),
        rhs,
        part="closed form vs reversed-companion sum",
    )
    if witness:
        return witness

    body = Polynomial.zero()
    for n in range(nt + 1):
        pair = hahn_h(n, q, a, b) * hahn_h(n, q, c, d, "u", "v")
        body = body + (pair * _tpow(n)).scale(_F1 / _qq(q, n))
    lhs = TruncatedSeries(body, nt, ns)
    return series_witness(lhs, rhs, part="diagonal sum vs closed form")


# ---------------------------------------------------------------------------
# C15: numeric spot checks inside the convergence region
# ---------------------------------------------------------------------------


def check_numeric_spot(config) -> Optional[Witness]:
    """Certified numeric agreement of three generating-function identities at
    a rational point with |xt| < 1, eps = 10^-30."""
    q = config.q
    a = _param(config, "a")
    x_val = _param(config, "x")
    y_val = _param(config, "y")
    t_val = _param(config, "t")
    eps = NUMERIC_EPS
    terms = NUMERIC_PARTIAL_TERMS

    z = x_val * t_val
    lhs = phi_numeric([a], [], q, z, eps)
    rhs = qpochhammer_inf(a * z, q, eps) * qpochhammer_inf(z, q, eps).invert()
    if not lhs.agrees_with(rhs):
        return Witness(_ZERO_EXPS, lhs.approx, rhs.approx, part="q_binomial_theorem")

    point = {"x": x_val, "y": y_val}
    partial = _F0
    for n in range(terms + 1):
        partial += cauchy_p(n, q).eval(point) * t_val**n / _qq(q, n)
    tail = cauchy_tail_bound(x_val, y_val, 0, t_val, q, terms)
    rhs = qpochhammer_inf(y_val * t_val, q, eps) * qpochhammer_inf(
        x_val * t_val, q, eps
    ).invert()
    if abs(partial - rhs.approx) > tail + rhs.error_bound:
        return Witness(_ZERO_EXPS, partial, rhs.approx, part="cauchy_gf")

    partial = _F0
    for n in range(terms + 1):
        partial += cauchy_p_general(n, q, a).eval(point) * t_val**n / _qq(q, n)
    tail = cauchy_tail_bound(x_val, y_val, a, t_val, q, terms)
    rhs = qpochhammer_inf(x_val * t_val, q, eps).invert() * phi_numeric(
        [a], [_F0], q, y_val * t_val, eps
    )
    if abs(partial - rhs.approx) > tail + rhs.error_bound:
        return Witness(_ZERO_EXPS, partial, rhs.approx, part="pgen_gf")
    return None


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckDef:
    func: Callable
    description: str


REGISTRY: dict = {
    "C1.euler_pair": CheckDef(
        check_euler_pair,
        "the two Euler series expansions multiply to 1",
    ),
    "C2.q_binomial_theorem": CheckDef(
        check_q_binomial_theorem,
        "1Phi0(a;-|q;xt) equals (a*xt;q)inf/(xt;q)inf coefficientwise",
    ),
    "C3.cauchy_gf": CheckDef(
        check_cauchy_gf,
        "generating function of p_n(x,y): sum p_n t^n/(q;q)_n = (yt;q)inf/(xt;q)inf",
    ),
    "C4.cauchy_symmetry": CheckDef(
        check_cauchy_symmetry,
        "reversal symmetries of p_n(x,y), n <= 8, all shifts",
    ),
    "C5.leibniz": CheckDef(
        check_leibniz,
        "q-Leibniz rule for D_q^n(fg), 100 seeded random pairs, n <= 4",
    ),
    "C5b.vandermonde_aux": CheckDef(
        check_vandermonde_aux,
        "finite q-binomial convolution for (q^(n+m-k+1);q)_k, n,m,k <= 5",
    ),
    "C6.dq_closed_forms": CheckDef(
        check_dq_closed_forms,
        "closed forms of D_q^n on powers and on (xt;q)inf",
    ),
    "C7.dq_phi": CheckDef(
        check_dq_phi,
        "D_q^n of 1Phi1(a;0|q;b*arg) via the parameter-shifted closed form",
    ),
    "C8.R_actions": CheckDef(
        check_r_actions,
        "actions of the one-parameter q-shift operator and the induced "
        "series transformation",
    ),
    "C9a.E_on_single_product": CheckDef(
        check_e_on_single_product,
        "E(a,y) acting on 1/(xt;q)inf",
    ),
    "C9b.E_on_double_product": CheckDef(
        check_e_on_double_product,
        "E(a,y) acting on 1/((xt,xs;q)inf)",
    ),
    "C9c.E_on_power_product": CheckDef(
        check_e_on_power_product,
        "E(a,y) acting on x^k/(xt;q)inf, k <= 3, with the k=0 collapse",
    ),
    "C10.E_triple_sum": CheckDef(
        check_e_triple_sum,
        "E(a,t) acting on s applied to the phi-weighted ratio equals the "
        "explicit triple sum",
    ),
    "C11a.pgen_gf": CheckDef(
        check_pgen_gf,
        "generating function for p_n(x,y,a)",
    ),
    "C11b.pgen_ext": CheckDef(
        check_pgen_ext,
        "extended generating function for p_{n+k}(x,y,a), k <= 3",
    ),
    "C11c.pgen_rogers": CheckDef(
        check_pgen_rogers,
        "double (t,s) generating function for p_{n+m}(x,y,a)",
    ),
    "C11d.pgen_mehler": CheckDef(
        check_pgen_mehler,
        "diagonal bilinear formula for p_n(x,y,a) p_n(u,v,alpha)",
    ),
    "C12.E_on_power": CheckDef(
        check_e_on_power,
        "E(a,y){x^n} = p_n(x,y,a), n <= 8",
    ),
    "C13a.L_on_prod": CheckDef(
        check_l_on_prod,
        "L(a,b) on (xt;q)inf/(yt;q)inf multiplies it by 1Phi1(a;0|q;bt)",
    ),
    "C13b.L_on_cauchy": CheckDef(
        check_l_on_cauchy,
        "L(a,b){p_n(y,x)} = h_n(x,y,a,b|q), n <= 8",
    ),
    "C14a.h_gf": CheckDef(
        check_h_gf,
        "generating function for h_n(x,y,a,b|q)",
    ),
    "C14b.h_ext": CheckDef(
        check_h_ext,
        "extended generating function for h_{n+k}, k <= 3",
    ),
    "C14c.h_rogers": CheckDef(
        check_h_rogers,
        "double (t,s) generating function for h_{n+m}, both closed forms",
    ),
    "C14d.h_mehler": CheckDef(
        check_h_mehler,
        "diagonal bilinear formula for h_n(x,y,a,b) h_n(u,v,c,d)",
    ),
    "C15.numeric_spot": CheckDef(
        check_numeric_spot,
        "certified numeric agreement of three generating functions at a "
        "rational point with |xt| < 1",
    ),
}
