"""The q-derivative, the homogeneous divided difference, and their operator series.

The q-derivative acting on one variable (no 1-q normalization):

    D_q f(a) = (f(a) - f(qa)) / a,       so  a^n  ->  (1 - q^n) a^(n-1).

The homogeneous divided difference acting on the pair (x, y):

    theta f = (f(x/q, y) - f(x, qy)) / (x/q - y),

a partial operator: the quotient must be exact, and NotDivisible is a normal
outcome outside its natural domain (the Cauchy-product family and series built
from it).

Two operator series are applied through ``apply_operator``:

    E(a,b)  = sum_k (-1)^k q^(k choose 2) (a;q)_k (b D_q)^k / (q;q)_k
    L(a,b)  = sum_k        q^(k choose 2) (a;q)_k (b theta)^k / (q;q)_k

with the a = 0 specializations as the classical one-parameter operators.  On a
polynomial the k-sum is finite because both operators strictly lower degree;
on a truncated series a parameter b with t/s content bounds k through the
caps, and otherwise the termwise degree bound applies coefficient by
coefficient.  Every sum here is exact under those bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from qhahn.families import cauchy_product
from qhahn.polyring import Polynomial, VAR_INDEX, divide_exact
from qhahn.pseries import ScaledMonomial, TruncatedSeries, as_scaled_monomial
from qhahn.qkernel import gauss_power, q_binomial, q_pochhammer

_F1 = Fraction(1)

Operand = Union[Polynomial, TruncatedSeries]


def dq(f: Operand, var: str, q) -> Operand:
    """One application of the q-derivative in ``var``: v^n -> (1-q^n) v^(n-1)."""
    if isinstance(f, TruncatedSeries):
        return TruncatedSeries(dq(f.body, var, q), f.cap_t, f.cap_s)
    q = Fraction(q)
    index = VAR_INDEX[var]
    out = {}
    for exps, coeff in f.terms.items():
        power = exps[index]
        if not power:
            continue
        value = coeff * (1 - q**power)
        if not value:
            continue
        lowered = list(exps)
        lowered[index] = power - 1
        out[tuple(lowered)] = value
    return Polynomial._raw(out)


def dq_power(f: Operand, var: str, q, n: int) -> Operand:
    """n-fold q-derivative."""
    for _ in range(n):
        f = dq(f, var, q)
    return f


def theta(f: Operand, q) -> Operand:
    """Homogeneous divided difference on (x, y); raises NotDivisible off-domain."""
    q = Fraction(q)
    if isinstance(f, TruncatedSeries):
        return TruncatedSeries(theta(f.body, q), f.cap_t, f.cap_s)
    numerator = f.substitute_scale("x", 1 / q) - f.substitute_scale("y", q)
    divisor = Polynomial.variable("x").scale(1 / q) - Polynomial.variable("y")
    return divide_exact(numerator, divisor)


def theta_power(f: Operand, q, n: int) -> Operand:
    for _ in range(n):
        f = theta(f, q)
    return f


def theta_power_on_cauchy(n: int, k: int, q) -> Polynomial:
    """Closed form theta^k p_n(y,x) = (-1)^k (q;q)_n/(q;q)_{n-k} p_{n-k}(y,x)."""
    if k > n:
        raise IndexError(f"theta_power_on_cauchy: k={k} exceeds n={n}")
    q = Fraction(q)
    ratio = q_pochhammer(q, q, n) / q_pochhammer(q, q, n - k)
    base = cauchy_product(
        n - k, q, Polynomial.variable("y"), Polynomial.variable("x")
    )
    return base.scale((-1) ** k * ratio)


@dataclass(frozen=True)
class OperatorSpec:
    """One operator series: kind "E" (q-derivative) or "L" (divided difference).

    The classical one-parameter operators are the a = 0 members, built by
    ``r_operator`` and ``l_operator``.  ``acts_on`` names the variable the
    q-derivative differentiates; the divided-difference family always acts on
    the fixed pair (x, y).
    """

    kind: str
    a: Fraction
    b: ScaledMonomial
    q: Fraction
    acts_on: str = "x"

    def __post_init__(self):
        if self.kind not in ("E", "L"):
            raise ValueError(f"unknown operator kind {self.kind!r}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", as_scaled_monomial(self.b))
        object.__setattr__(self, "q", Fraction(self.q))

    def weight(self, k: int) -> Fraction:
        """Coefficient of (b Op)^k in the operator series."""
        value = (
            gauss_power(k, self.q)
            * q_pochhammer(self.a, self.q, k)
            / q_pochhammer(self.q, self.q, k)
        )
        if self.kind == "E":
            value *= (-1) ** k
        return value


def e_tilde(a, b, q, acts_on: str = "x") -> OperatorSpec:
    return OperatorSpec("E", Fraction(a), as_scaled_monomial(b), Fraction(q), acts_on)


def r_operator(b, q, acts_on: str = "x") -> OperatorSpec:
    return e_tilde(0, b, q, acts_on)


def l_tilde(a, b, q) -> OperatorSpec:
    return OperatorSpec("L", Fraction(a), as_scaled_monomial(b), Fraction(q), "x")


def l_operator(b, q) -> OperatorSpec:
    return l_tilde(0, b, q)


def apply_operator(op: OperatorSpec, f: Operand) -> Operand:
    """Apply the operator series to a polynomial or truncated series.

    The k-sum stops when the iterated operator annihilates the operand (both
    operators strictly lower a degree, so this always happens for polynomial
    coefficients) and, for a series with t/s content in b, no later than the
    cap bound, past which b^k itself truncates to zero.
    """
    if isinstance(f, TruncatedSeries):
        cap_bound = None
        bounds = []
        if op.b.t_degree > 0:
            bounds.append(f.cap_t // op.b.t_degree)
        if op.b.s_degree > 0:
            bounds.append(f.cap_s // op.b.s_degree)
        if bounds:
            cap_bound = min(bounds)
    else:
        cap_bound = None

    step = (
        (lambda g: dq(g, op.acts_on, op.q))
        if op.kind == "E"
        else (lambda g: theta(g, op.q))
    )
    result = f * op.weight(0)
    current = f
    k = 0
    while True:
        k += 1
        if cap_bound is not None and k > cap_bound:
            break
        current = step(current)
        if current.is_zero():
            break
        result = result + current * op.b.power_poly(k).scale(op.weight(k))
    return result


def leibniz_expansion(f: Polynomial, g: Polynomial, var: str, q, n: int) -> Polynomial:
    """Right side of the q-Leibniz rule for D_q^n{f g}:

        sum_k [n k]_q q^{k(k-n)} D_q^k{f} * D_q^{n-k}{g(q^k var)}

    where the substitution var -> q^k var happens before differentiating.
    """
    q = Fraction(q)
    total = Polynomial.zero()
    for k in range(n + 1):
        left = dq_power(f, var, q, k)
        right = dq_power(g.substitute_scale(var, q**k), var, q, n - k)
        weight = q_binomial(n, k, q) * q ** (k * (k - n))
        total = total + (left * right).scale(weight)
    return total
