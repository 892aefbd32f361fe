"""Exact rational q-combinatorics.

Finite q-shifted factorials, q-numbers/factorials, Gaussian binomial values
and the ubiquitous q^(k choose 2) weight, all computed over
``fractions.Fraction`` so every result is exact.  The base q may be any
nonzero rational; callers that need 0 < q < 1 (infinite products, numeric
evaluation) enforce that themselves, since the finite quantities here are
rational functions valid for generic q.

Conventions:

    (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k),        (a;q)_0 = 1
    [n]_q   = (1 - q^n) / (1 - q)
    [n]_q!  = prod_{k=1}^{n} (1 - q^k) / (1 - q),  [0]_q! = 1
    [n k]_q = [n]_q! / ([k]_q! [n-k]_q!)
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def rational(value, denominator=None) -> Fraction:
    """Build a Rational from ints, another Rational, or "p/q" / "p" text."""
    if denominator is not None:
        return Fraction(value, denominator)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.fullmatch(text):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use exact rationals")
    return Fraction(value)


def format_rational(value) -> str:
    """Canonical "p/q" (or bare "p") text form."""
    return str(Fraction(value))


def q_pochhammer(a, q, n: int) -> Fraction:
    """q-shifted factorial (a;q)_n; the empty product for n = 0."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    a = Fraction(a)
    q = Fraction(q)
    result = Fraction(1)
    power = Fraction(1)
    for _ in range(n):
        result *= 1 - a * power
        power *= q
    return result


def q_number(n: int, q) -> Fraction:
    """[n]_q = (1 - q^n)/(1 - q); raises ZeroDivisionError at q = 1."""
    if n < 0:
        raise ValueError("q_number needs n >= 0")
    q = Fraction(q)
    return (1 - q**n) / (1 - q)


def q_factorial(n: int, q) -> Fraction:
    """[n]_q!; raises ZeroDivisionError at q = 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    q = Fraction(q)
    result = Fraction(1)
    for k in range(1, n + 1):
        result *= (1 - q**k) / (1 - q)
    return result


def q_binomial(n: int, k: int, q) -> Fraction:
    """Gaussian binomial [n k]_q via the exact q-factorial ratio.

    The tests cross-check this against the independent Pochhammer-ratio form
    (q;q)_n / ((q;q)_k (q;q)_{n-k}).
    """
    if k < 0 or n < 0:
        raise ValueError("q_binomial needs n, k >= 0")
    if k > n:
        raise IndexError(f"q_binomial: k={k} exceeds n={n}")
    q = Fraction(q)
    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q))


def gauss_power(k: int, q) -> Fraction:
    """q^(k choose 2) = q^{k(k-1)/2}, the standard q-exponential weight."""
    if k < 0:
        raise ValueError("gauss_power needs k >= 0")
    return Fraction(q) ** (k * (k - 1) // 2)
