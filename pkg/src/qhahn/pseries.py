"""Truncated formal power series in t and s over the exact polynomial ring.

A TruncatedSeries is a polynomial representative of a series modulo
(t^{cap_t+1}, s^{cap_s+1}); all arithmetic discards terms beyond the caps, and
mixed-cap operands combine at the per-variable minimum.  Coefficientwise
equality below the caps is the notion of identity used by the verification
suite.

The expanders here turn every infinite product and basic hypergeometric sum
into such a series:

    euler_recip(w)    = 1/(w;q)_inf   = sum_k w^k / (q;q)_k
    euler_product(w)  = (w;q)_inf     = sum_k (-1)^k q^(k choose 2) w^k / (q;q)_k
    phi_series        = sum_m [(-1)^m q^(m choose 2)]^(1+s-r)
                          * prod_i (a_i;q)_m / prod_j (b_j;q)_m
                          * z^m / (q;q)_m

where the argument and the parameters are scaled monomials (e.g. x*t, y*s,
(1/7)*x*t).  Monomial-valued upper parameters expand to exact polynomial
Pochhammers; monomial-valued lower parameters are inverted as series.  The
summation index is bounded by the caps through the t/s content of the
argument, or by a terminating upper parameter of the form q^(-k); when neither
bound exists the expansion refuses (NonTerminating) rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from qhahn.errors import NonTerminating, NotInvertible, DenominatorPole
from qhahn.polyring import (
    Polynomial,
    S_INDEX,
    T_INDEX,
    VARIABLES,
    VAR_INDEX,
)
from qhahn.qkernel import gauss_power

_F0 = Fraction(0)
_F1 = Fraction(1)
_ZERO_EXPS = (0, 0, 0, 0, 0, 0)


@dataclass(frozen=True)
class ScaledMonomial:
    """A rational coefficient times one power product, e.g. (1/7)*x*t."""

    coeff: Fraction
    exponents: tuple = _ZERO_EXPS

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != len(VARIABLES) or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {self.exponents!r}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, coeff=1, **powers: int) -> ScaledMonomial:
        exps = [0] * len(VARIABLES)
        for name, power in powers.items():
            exps[VAR_INDEX[name]] = power
        return cls(Fraction(coeff), tuple(exps))

    @classmethod
    def constant(cls, value) -> ScaledMonomial:
        return cls(Fraction(value), _ZERO_EXPS)

    def is_zero(self) -> bool:
        return self.coeff == 0

    @property
    def t_degree(self) -> int:
        return self.exponents[T_INDEX]

    @property
    def s_degree(self) -> int:
        return self.exponents[S_INDEX]

    def scaled(self, value) -> ScaledMonomial:
        return ScaledMonomial(self.coeff * Fraction(value), self.exponents)

    def as_polynomial(self) -> Polynomial:
        if self.coeff == 0:
            return Polynomial.zero()
        return Polynomial.monomial(self.exponents, self.coeff)

    def power_poly(self, power: int) -> Polynomial:
        """The monomial self**power as a polynomial."""
        if power == 0:
            return Polynomial.one()
        if self.coeff == 0:
            return Polynomial.zero()
        exps = tuple(e * power for e in self.exponents)
        return Polynomial.monomial(exps, self.coeff**power)


def as_scaled_monomial(value) -> ScaledMonomial:
    if isinstance(value, ScaledMonomial):
        return value
    if isinstance(value, (int, Fraction)):
        return ScaledMonomial.constant(value)
    raise TypeError(f"cannot interpret {value!r} as a scaled monomial")


class TruncatedSeries:
    """A polynomial plus degree caps on the series variables t and s."""

    __slots__ = ("_body", "cap_t", "cap_s")

    def __init__(self, body: Polynomial, cap_t: int, cap_s: int):
        if cap_t < 0 or cap_s < 0:
            raise ValueError("caps must be nonnegative")
        self._body = body.truncate(cap_t, cap_s)
        self.cap_t = cap_t
        self.cap_s = cap_s

    @classmethod
    def zero(cls, cap_t: int, cap_s: int) -> TruncatedSeries:
        return cls(Polynomial.zero(), cap_t, cap_s)

    @classmethod
    def one(cls, cap_t: int, cap_s: int) -> TruncatedSeries:
        return cls(Polynomial.one(), cap_t, cap_s)

    @property
    def body(self) -> Polynomial:
        return self._body

    def is_zero(self) -> bool:
        return self._body.is_zero()

    def coefficient(self, t_power: int, s_power: int) -> Polynomial:
        """The t^i s^j coefficient, a polynomial in x, y, u, v."""
        out = {}
        for exps, coeff in self._body.terms.items():
            if exps[T_INDEX] == t_power and exps[S_INDEX] == s_power:
                reduced = list(exps)
                reduced[T_INDEX] = 0
                reduced[S_INDEX] = 0
                out[tuple(reduced)] = coeff
        return Polynomial(out)

    def truncate(self, cap_t: int, cap_s: int) -> TruncatedSeries:
        return TruncatedSeries(
            self._body, min(self.cap_t, cap_t), min(self.cap_s, cap_s)
        )

    def _caps_with(self, other: TruncatedSeries):
        return min(self.cap_t, other.cap_t), min(self.cap_s, other.cap_s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.cap_t == other.cap_t
            and self.cap_s == other.cap_s
            and self._body == other._body
        )

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        cap_t, cap_s = self._caps_with(other)
        return TruncatedSeries(self._body + other._body, cap_t, cap_s)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-self._body, self.cap_t, self.cap_s)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> TruncatedSeries:
        return -(self - other)

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(
                self._body.scale(other), self.cap_t, self.cap_s
            )
        other = self._coerce(other)
        cap_t, cap_s = self._caps_with(other)
        return TruncatedSeries(
            self._body.mul_capped(other._body, cap_t, cap_s), cap_t, cap_s
        )

    __rmul__ = __mul__

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Polynomial):
            return TruncatedSeries(other, self.cap_t, self.cap_s)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(Polynomial.const(other), self.cap_t, self.cap_s)
        raise TypeError(f"cannot combine series with {other!r}")

    def invert(self) -> TruncatedSeries:
        """Multiplicative inverse up to the caps.

        Requires the t^0 s^0 coefficient to be a nonzero rational constant;
        the inverse is the Neumann sum over powers of (1 - self/c).
        """
        constant = self.coefficient(0, 0)
        unit = constant.constant_term()
        if unit == 0 or constant != Polynomial.const(unit):
            raise NotInvertible(
                "series inverse needs a nonzero constant t^0 s^0 coefficient, "
                f"got {constant}"
            )
        one = TruncatedSeries.one(self.cap_t, self.cap_s)
        correction = one - self * (_F1 / unit)
        result = one
        power = one
        for _ in range(self.cap_t + self.cap_s):
            power = power * correction
            if power.is_zero():
                break
            result = result + power
        return result * (_F1 / unit)

    def to_pairs(self) -> list:
        return self._body.to_pairs()

    def __str__(self) -> str:
        return (
            f"{self._body} (+O(t^{self.cap_t + 1}) + O(s^{self.cap_s + 1}))"
        )

    def __repr__(self) -> str:
        return f"TruncatedSeries({self})"


SeriesLike = Union[TruncatedSeries, Polynomial, int, Fraction]


def pochhammer_poly(w, q, n: int) -> Polynomial:
    """Finite shifted factorial (w;q)_n expanded exactly as a polynomial."""
    w = as_scaled_monomial(w)
    q = Fraction(q)
    result = Polynomial.one()
    for k in range(n):
        factor = Polynomial.one() - w.scaled(q**k).as_polynomial()
        result = result * factor
    return result


def _index_bound(w: ScaledMonomial, cap_t: int, cap_s: int):
    """Largest power of w that can survive the caps, or None if unbounded."""
    bounds = []
    if w.t_degree > 0:
        bounds.append(cap_t // w.t_degree)
    if w.s_degree > 0:
        bounds.append(cap_s // w.s_degree)
    return min(bounds) if bounds else None


def euler_recip(w, q, cap_t: int, cap_s: int) -> TruncatedSeries:
    """1/(w;q)_inf = sum_k w^k/(q;q)_k, truncated at the caps."""
    w = as_scaled_monomial(w)
    q = Fraction(q)
    if w.is_zero():
        return TruncatedSeries.one(cap_t, cap_s)
    bound = _index_bound(w, cap_t, cap_s)
    if bound is None:
        raise NonTerminating(
            "1/(w;q)_inf needs t or s content in w to truncate"
        )
    body = Polynomial.zero()
    poch = _F1
    for k in range(bound + 1):
        body = body + w.power_poly(k).scale(_F1 / poch)
        poch *= 1 - q ** (k + 1)
    return TruncatedSeries(body, cap_t, cap_s)


def euler_product(w, q, cap_t: int, cap_s: int) -> TruncatedSeries:
    """(w;q)_inf = sum_k (-1)^k q^(k choose 2) w^k/(q;q)_k, truncated."""
    w = as_scaled_monomial(w)
    q = Fraction(q)
    if w.is_zero():
        return TruncatedSeries.one(cap_t, cap_s)
    bound = _index_bound(w, cap_t, cap_s)
    if bound is None:
        raise NonTerminating("(w;q)_inf needs t or s content in w to truncate")
    body = Polynomial.zero()
    poch = _F1
    sign = _F1
    for k in range(bound + 1):
        body = body + w.power_poly(k).scale(sign * gauss_power(k, q) / poch)
        poch *= 1 - q ** (k + 1)
        sign = -sign
    return TruncatedSeries(body, cap_t, cap_s)


def _terminating_order(a: Fraction, q: Fraction):
    """Smallest k with a = q^(-k) (so (a;q)_m = 0 for m > k), or None."""
    if a == 0:
        return None
    value = _F1
    for k in range(4096):
        if value == a:
            return k
        value /= q
        if abs(q) < 1 and abs(value) > abs(a):
            # |q^-k| grows monotonically; no match possible past |a|
            return None
    return None


def phi_series(
    numerator,
    denominator,
    q,
    z,
    cap_t: int,
    cap_s: int,
) -> TruncatedSeries:
    """Basic hypergeometric series rPhis, truncated at the caps.

    ``numerator`` and ``denominator`` are sequences of rationals or scaled
    monomials.  The sign/q-power correction is raised to 1 + s - r with r and
    s the parameter counts, following the series definition literally.
    """
    numer = [as_scaled_monomial(p) for p in numerator]
    denom = [as_scaled_monomial(p) for p in denominator]
    q = Fraction(q)
    z = as_scaled_monomial(z)
    exponent = 1 + len(denom) - len(numer)

    bound = None if z.is_zero() else _index_bound(z, cap_t, cap_s)
    if z.is_zero():
        bound = 0
    if bound is None:
        orders = [
            _terminating_order(p.coeff, q)
            for p in numer
            if p.exponents == _ZERO_EXPS
        ]
        orders = [k for k in orders if k is not None]
        if orders:
            bound = min(orders)
    if bound is None:
        raise NonTerminating(
            "rPhis needs t/s content in the argument or a terminating "
            "q^-k upper parameter"
        )

    result = TruncatedSeries.zero(cap_t, cap_s)
    # Running m-indexed state, updated one factor at a time.
    num_consts = _F1
    num_polys = TruncatedSeries.one(cap_t, cap_s)
    den_consts = _F1
    den_inverse = TruncatedSeries.one(cap_t, cap_s)
    qq_poch = _F1
    for m in range(bound + 1):
        if m > 0:
            step = q ** (m - 1)
            for p in numer:
                if p.exponents == _ZERO_EXPS:
                    num_consts *= 1 - p.coeff * step
                else:
                    factor = Polynomial.one() - p.scaled(step).as_polynomial()
                    num_polys = num_polys * factor
            for p in denom:
                if p.exponents == _ZERO_EXPS:
                    den_consts *= 1 - p.coeff * step
                    if den_consts == 0:
                        raise DenominatorPole(
                            f"lower parameter {p.coeff} hits zero at index {m}"
                        )
                else:
                    factor = TruncatedSeries(
                        Polynomial.one() - p.scaled(step).as_polynomial(),
                        cap_t,
                        cap_s,
                    )
                    den_inverse = den_inverse * factor.invert()
            qq_poch *= 1 - q**m
        if num_consts == 0:
            break  # terminating numerator parameter: all later terms vanish
        weight = num_consts / (den_consts * qq_poch)
        if exponent:
            weight *= ((-1) ** m * gauss_power(m, q)) ** exponent
        term = num_polys * den_inverse * z.power_poly(m).scale(weight)
        result = result + term
    return result
