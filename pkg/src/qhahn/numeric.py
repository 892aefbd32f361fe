"""Certified numeric evaluation of infinite q-products and basic series.

Everything here is exact rational arithmetic on truncated sums paired with a
rigorous rational tail bound, so a CertifiedValue (approx, error_bound) always
satisfies |true - approx| <= error_bound.  No floating point is involved.

Tail bounds, with proofs
------------------------

Infinite product (a;q)_inf, 0 < q < 1.  Write P_K for the partial product of
the first K factors and S_K = |a| q^K / (1-q) = sum_{k>=K} |a| q^k.  For any
u_k with |u_k| <= s_k and sum s_k = S < 1,

    |prod (1 - u_k) - 1| <= prod (1 + s_k) - 1 <= 1/(1 - S) - 1 = S/(1 - S),

where the middle step expands the product over subsets and bounds the sum of
the size-m subset products by S^m.  Hence once S_K <= 1/2 the tail factor is
within 2 S_K of 1 and

    |(a;q)_inf - P_K| <= 2 |P_K| S_K.

Series sum_m term_m with eventual geometric domination.  Choose rho =
(1 + |z|)/2 < 1 and a horizon K with

    R_K := |z| * prod_i (1 + |a_i| q^K) / (prod_j (1 - |b_j| q^K) (1 - q^{K+1}))
        <= rho;

R_K bounds |term_{m+1}/term_m| for every m >= K because each factor is
monotone in m.  Then for any m >= K the tail after term_m is at most
|term_m| rho/(1 - rho).

Family partial sums.  For the generating-function spot checks the tail of
sum_n p_n(x,y,a) t^n/(q;q)_n beyond N is bounded using [n k]_q <= 1/(q;q)_inf^2,
|(a;q)_k| <= (-|a|;q)_inf and 1/(q;q)_n <= 1/(q;q)_inf, giving

    |p_n(x,y,a) t^n/(q;q)_n| <= (A / L^3) (n+1) r^n,

with A an upper certificate for (-|a|;q)_inf, L a lower certificate for
(q;q)_inf, M = max(|x|,|y|) and r = M |t| < 1, and the exact remainder formula
sum_{n>N} (n+1) r^n = r^{N+1} ((N+2) - (N+1) r)/(1-r)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from qhahn.errors import DenominatorPole, DomainError, NonConvergent
from qhahn.qkernel import gauss_power

_F0 = Fraction(0)
_F1 = Fraction(1)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CertifiedValue:
    """A rational approximation with a rigorous rational error bound."""

    approx: Fraction
    error_bound: Fraction

    def __post_init__(self):
        object.__setattr__(self, "approx", Fraction(self.approx))
        object.__setattr__(self, "error_bound", Fraction(self.error_bound))
        if self.error_bound < 0:
            raise ValueError("error bound must be nonnegative")

    @classmethod
    def exact(cls, value) -> CertifiedValue:
        return cls(Fraction(value), _F0)

    def __add__(self, other) -> CertifiedValue:
        other = _coerce(other)
        return CertifiedValue(
            self.approx + other.approx, self.error_bound + other.error_bound
        )

    __radd__ = __add__

    def __neg__(self) -> CertifiedValue:
        return CertifiedValue(-self.approx, self.error_bound)

    def __sub__(self, other) -> CertifiedValue:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> CertifiedValue:
        return -(self - other)

    def __mul__(self, other) -> CertifiedValue:
        other = _coerce(other)
        bound = (
            abs(self.approx) * other.error_bound
            + abs(other.approx) * self.error_bound
            + self.error_bound * other.error_bound
        )
        return CertifiedValue(self.approx * other.approx, bound)

    __rmul__ = __mul__

    def invert(self) -> CertifiedValue:
        """1/self; requires the interval to exclude zero."""
        magnitude = abs(self.approx)
        if magnitude <= self.error_bound:
            raise DomainError("cannot invert an interval containing zero")
        bound = self.error_bound / (magnitude * (magnitude - self.error_bound))
        return CertifiedValue(_F1 / self.approx, bound)

    def contains(self, value) -> bool:
        return abs(self.approx - Fraction(value)) <= self.error_bound

    def agrees_with(self, other: CertifiedValue) -> bool:
        """True when the two certified intervals overlap."""
        return abs(self.approx - other.approx) <= self.error_bound + other.error_bound

    def __str__(self) -> str:
        return f"{self.approx} ± {self.error_bound}"


def _coerce(value) -> CertifiedValue:
    if isinstance(value, CertifiedValue):
        return value
    return CertifiedValue.exact(value)


def _require_q(q: Fraction):
    if not 0 < q < 1:
        raise DomainError(f"need 0 < q < 1, got {q}")


def qpochhammer_inf(a, q, eps) -> CertifiedValue:
    """(a;q)_inf with |true - approx| <= error_bound <= eps.

    Stops at the first K with S_K = |a| q^K/(1-q) <= 1/2 and
    2 |P_K| S_K <= eps (see the module tail-bound notes); a zero factor
    short-circuits to an exact 0.
    """
    a = Fraction(a)
    q = Fraction(q)
    eps = Fraction(eps)
    _require_q(q)
    if eps <= 0:
        raise DomainError("eps must be positive")
    if a == 0:
        return CertifiedValue.exact(1)
    partial = _F1
    power = _F1  # q^k
    while True:
        tail_sum = abs(a) * power / (1 - q)
        if tail_sum <= _HALF:
            bound = 2 * abs(partial) * tail_sum
            if bound <= eps:
                return CertifiedValue(partial, bound)
        factor = 1 - a * power
        if factor == 0:
            return CertifiedValue.exact(0)
        partial *= factor
        power *= q


def phi_numeric(
    numerator: Sequence,
    denominator: Sequence,
    q,
    z,
    eps,
) -> CertifiedValue:
    """Basic hypergeometric series at a rational point, certified.

    Terminating series (an upper parameter of the form q^-k) give an exact
    value with zero bound; otherwise the series must be geometrically
    dominated (|z| < 1 with at most one more upper than lower parameter), and
    the partial sum stops once the geometric tail bound drops below eps.
    """
    upper = [Fraction(p) for p in numerator]
    lower = [Fraction(p) for p in denominator]
    q = Fraction(q)
    z = Fraction(z)
    eps = Fraction(eps)
    _require_q(q)
    if eps <= 0:
        raise DomainError("eps must be positive")
    exponent = 1 + len(lower) - len(upper)

    last_index = _termination_index(upper, q)
    if last_index is None:
        if exponent < 0:
            raise NonConvergent(
                "more than one extra upper parameter; series not dominated"
            )
        if abs(z) >= 1:
            raise NonConvergent(f"|z| = {abs(z)} is not < 1")
        rho = (1 + abs(z)) / 2
        horizon = _domination_horizon(upper, lower, q, z, rho)
    else:
        rho = horizon = None

    total = _F0
    term = _F1  # term_0
    num_prod = _F1
    den_prod = _F1
    qq = _F1
    zpow = _F1
    m = 0
    while True:
        total += term
        if last_index is not None and m >= last_index:
            return CertifiedValue(total, _F0)
        # advance to term_{m+1}
        step = q**m
        m += 1
        for p in upper:
            num_prod *= 1 - p * step
        for p in lower:
            den_prod *= 1 - p * step
            if den_prod == 0:
                raise DenominatorPole(f"lower parameter hits zero at index {m}")
        qq *= 1 - q**m
        zpow *= z
        weight = ((-1) ** m * gauss_power(m, q)) ** exponent if exponent else _F1
        term = weight * num_prod * zpow / (den_prod * qq)
        if horizon is not None and m > horizon:
            bound = abs(term) / (1 - rho)
            if bound <= eps:
                return CertifiedValue(total, bound)
        if m > 200_000:
            raise NonConvergent("term count safety limit exceeded")


def _termination_index(upper, q: Fraction):
    """Largest index with a nonzero term when some upper parameter is q^-j.

    An upper parameter equal to q^-j zeroes (p;q)_m for every m > j, so the
    series is the finite sum over m <= j; returns the smallest such j, or
    None when no parameter has that form.
    """
    best = None
    for p in upper:
        if p < 1:
            continue
        value = p
        j = 0
        while value > 1:
            value *= q
            j += 1
        if value == 1 and (best is None or j < best):
            best = j
    return best


def _domination_horizon(upper, lower, q, z, rho) -> int:
    """Smallest doubling K with the ratio bound R_K <= rho (module notes)."""
    k = 1
    while True:
        power = q**k
        feasible = all(1 - abs(b) * power > 0 for b in lower)
        if feasible:
            ratio = abs(z)
            for a in upper:
                ratio *= 1 + abs(a) * power
            for b in lower:
                ratio /= 1 - abs(b) * power
            ratio /= 1 - q ** (k + 1)
            if ratio <= rho:
                return k
        k *= 2
        if k > 1 << 22:
            raise NonConvergent("no geometric domination horizon found")


def cauchy_tail_bound(x, y, a, t, q, n_terms: int) -> Fraction:
    """Rigorous bound on |sum_{n>N} p_n(x,y,a) t^n/(q;q)_n| at a rational point.

    Uses the (A / L^3) (n+1) r^n envelope from the module notes; requires
    r = max(|x|,|y|) |t| < 1.
    """
    x = Fraction(x)
    y = Fraction(y)
    a = Fraction(a)
    t = Fraction(t)
    q = Fraction(q)
    _require_q(q)
    radius = max(abs(x), abs(y)) * abs(t)
    if radius >= 1:
        raise DomainError(f"tail bound needs max(|x|,|y|)|t| < 1, got {radius}")
    eps0 = Fraction(1, 10**35)
    qq_inf = qpochhammer_inf(q, q, eps0)
    lower = qq_inf.approx - qq_inf.error_bound
    if lower <= 0:
        raise DomainError("no positive lower certificate for (q;q)_inf")
    if a == 0:
        upper_a = _F1
    else:
        poch_a = qpochhammer_inf(-abs(a), q, eps0)
        upper_a = poch_a.approx + poch_a.error_bound
    envelope = upper_a / lower**3
    n = n_terms
    remainder = radius ** (n + 1) * ((n + 2) - (n + 1) * radius) / (1 - radius) ** 2
    return envelope * remainder
