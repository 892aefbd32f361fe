"""Constructors for the Cauchy and Hahn polynomial families.

    p_n(x,y)       = (x - y)(x - qy)...(x - q^(n-1) y)
    p_n(x,y,a)     = sum_k [n k]_q (-1)^k q^(k choose 2) (a;q)_k x^(n-k) y^k
    h_n(x,y,a,b|q) = sum_k [n k]_q (-1)^k q^(k choose 2) b^k (a;q)_k p_{n-k}(y,x)

plus the trivariate specialization of h at a = 0 and the two classical Hahn
psi substitutions.  The parameter a is always a numeric rational; b may be a
rational or a monomial in x, y, u, v.  All constructors are plain expansions,
independent of the operator module, so operator/family agreement is a genuine
two-route check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from qhahn.polyring import Polynomial
from qhahn.pseries import ScaledMonomial
from qhahn.qkernel import gauss_power, q_binomial, q_pochhammer

BWeight = Union[int, Fraction, Polynomial, ScaledMonomial]


def _as_poly(value: BWeight) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, ScaledMonomial):
        return value.as_polynomial()
    return Polynomial.const(value)


def cauchy_product(n: int, q, first: Polynomial, second: Polynomial) -> Polynomial:
    """The shifted product prod_{j<n} (first - q^j second); 1 when n = 0."""
    if n < 0:
        raise ValueError("cauchy_product needs n >= 0")
    q = Fraction(q)
    result = Polynomial.one()
    power = Fraction(1)
    for _ in range(n):
        result = result * (first - second.scale(power))
        power *= q
    return result


def cauchy_p(n: int, q) -> Polynomial:
    """Cauchy polynomial p_n(x,y), monic of degree n in x."""
    return cauchy_product(
        n, q, Polynomial.variable("x"), Polynomial.variable("y")
    )


def cauchy_p_general(
    n: int, q, a, xvar: str = "x", yvar: str = "y"
) -> Polynomial:
    """Generalized Cauchy polynomial p_n(x,y,a), reducing to p_n(x,y) at a = 0."""
    if n < 0:
        raise ValueError("cauchy_p_general needs n >= 0")
    q = Fraction(q)
    a = Fraction(a)
    xp = Polynomial.variable(xvar)
    yp = Polynomial.variable(yvar)
    total = Polynomial.zero()
    for k in range(n + 1):
        weight = (
            q_binomial(n, k, q)
            * (-1) ** k
            * gauss_power(k, q)
            * q_pochhammer(a, q, k)
        )
        total = total + (xp ** (n - k) * yp**k).scale(weight)
    return total


def hahn_h(
    n: int, q, a, b: BWeight, xvar: str = "x", yvar: str = "y"
) -> Polynomial:
    """Generalized Hahn polynomial h_n(x,y,a,b|q) over the chosen variable pair."""
    if n < 0:
        raise ValueError("hahn_h needs n >= 0")
    q = Fraction(q)
    a = Fraction(a)
    b_poly = _as_poly(b)
    xp = Polynomial.variable(xvar)
    yp = Polynomial.variable(yvar)
    total = Polynomial.zero()
    for k in range(n + 1):
        weight = (
            q_binomial(n, k, q)
            * (-1) ** k
            * gauss_power(k, q)
            * q_pochhammer(a, q, k)
        )
        total = total + (b_poly**k * cauchy_product(n - k, q, yp, xp)).scale(weight)
    return total


def trivariate_f(n: int, q, z: BWeight) -> Polynomial:
    """Trivariate family F_n(x,y,z;q) = (-1)^n q^-(n choose 2) h_n(x,y,0,z|q)."""
    scale = Fraction((-1) ** n) / gauss_power(n, q)
    return hahn_h(n, q, 0, z).scale(scale)


def hahn_psi(variant: str, n: int, a_scale, q, b: BWeight | None = None) -> Polynomial:
    """Classical Hahn polynomials via substitution into h_n.

    variant "one":  psi_n = (-1)^n q^-(n choose 2) h_n(x, a*x, 0, 1|q), in x alone.
    variant "two":  psi_n = (-1)^n q^-(n choose 2) h_n(x, a*x, 0, y|q), in x and y.
    """
    if variant not in ("one", "two"):
        raise ValueError(f"unknown psi variant {variant!r}")
    q = Fraction(q)
    a_scale = Fraction(a_scale)
    if variant == "one":
        b_poly = Polynomial.one()
    else:
        b_poly = _as_poly(b) if b is not None else Polynomial.variable("y")
    xp = Polynomial.variable("x")
    ax = xp.scale(a_scale)
    total = Polynomial.zero()
    for k in range(n + 1):
        weight = q_binomial(n, k, q) * (-1) ** k * gauss_power(k, q)
        total = total + (b_poly**k * cauchy_product(n - k, q, ax, xp)).scale(weight)
    return total.scale(Fraction((-1) ** n) / gauss_power(n, q))


def cauchy_symmetry_check(n: int, q) -> bool:
    """p_n(x,y) = (-1)^n q^(n choose 2) p_n(y, q^(1-n) x), exactly."""
    q = Fraction(q)
    lhs = cauchy_p(n, q)
    xp = Polynomial.variable("x")
    yp = Polynomial.variable("y")
    rhs = cauchy_product(n, q, yp, xp.scale(q ** (1 - n))).scale(
        (-1) ** n * gauss_power(n, q)
    )
    return lhs == rhs


def shifted_symmetry_check(n: int, k: int, q) -> bool:
    """p_{n-k}(x, q^(1-n) y) = (-1)^(n-k) q^((k 2)-(n 2)) p_{n-k}(y, q^k x)."""
    if not 0 <= k <= n:
        raise ValueError("shifted_symmetry_check needs 0 <= k <= n")
    q = Fraction(q)
    xp = Polynomial.variable("x")
    yp = Polynomial.variable("y")
    lhs = cauchy_product(n - k, q, xp, yp.scale(q ** (1 - n)))
    scale = (-1) ** (n - k) * gauss_power(k, q) / gauss_power(n, q)
    rhs = cauchy_product(n - k, q, yp, xp.scale(q**k)).scale(scale)
    return lhs == rhs
