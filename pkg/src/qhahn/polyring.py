"""Sparse exact polynomials over Q in the fixed variable alphabet x, y, u, v, t, s.

Terms are stored as a map from exponent 6-tuples to nonzero Fraction
coefficients; the zero polynomial is the empty map.  The monomial order used
for printing, leading terms and exact division is graded lexicographic on the
fixed variable order.  Products are dispatched to the kernel backend selected
in ``qhahn._accel`` (compiled extension when built, pure Python otherwise).

Canonical text form: terms sorted graded-lex descending, e.g.
``x^2 - 3/2*x*y + 1/2*y^2``; unit coefficients and unit exponents are elided.
``Polynomial.parse`` accepts the same grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from types import MappingProxyType
from typing import Iterator, Mapping, Union

from qhahn._accel import poly_mul_capped
from qhahn.errors import MissingAssignment, NotDivisible

VARIABLES = ("x", "y", "u", "v", "t", "s")
VAR_INDEX = {name: index for index, name in enumerate(VARIABLES)}
T_INDEX = VAR_INDEX["t"]
S_INDEX = VAR_INDEX["s"]

Exponents = tuple
Scalar = Union[int, Fraction]

_ZERO_EXPS = (0, 0, 0, 0, 0, 0)
_F0 = Fraction(0)
_F1 = Fraction(1)


def grlex_key(exponents):
    """Sort key realizing the graded-lexicographic order."""
    return (sum(exponents), exponents)


def _monomial_text(exponents, magnitude: Fraction) -> str:
    factors = [
        name if power == 1 else f"{name}^{power}"
        for name, power in zip(VARIABLES, exponents)
        if power
    ]
    if not factors:
        return str(magnitude)
    if magnitude != 1:
        factors.insert(0, str(magnitude))
    return "*".join(factors)


@total_ordering
@dataclass(frozen=True)
class Monomial:
    """A power product over the fixed alphabet, ordered graded-lex."""

    exponents: tuple = _ZERO_EXPS

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != len(VARIABLES) or any(e < 0 for e in exps):
            raise ValueError(f"need six nonnegative exponents, got {self.exponents!r}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, **powers: int) -> Monomial:
        exps = [0] * len(VARIABLES)
        for name, power in powers.items():
            exps[VAR_INDEX[name]] = power
        return cls(tuple(exps))

    def degree(self) -> int:
        return sum(self.exponents)

    def __lt__(self, other: Monomial) -> bool:
        return grlex_key(self.exponents) < grlex_key(other.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return _monomial_text(self.exponents, _F1)


class Polynomial:
    """Immutable sparse polynomial with exact ring arithmetic."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        clean: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            if isinstance(key, Monomial):
                key = key.exponents
            exps = tuple(int(e) for e in key)
            if len(exps) != len(VARIABLES) or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {key!r}")
            value = clean.get(exps, _F0) + Fraction(coeff)
            if value:
                clean[exps] = value
            else:
                clean.pop(exps, None)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> Polynomial:
        """Trusted constructor: terms already canonical (no zeros, valid keys)."""
        poly = object.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._raw({})

    @classmethod
    def one(cls) -> Polynomial:
        return cls._raw({_ZERO_EXPS: _F1})

    @classmethod
    def const(cls, value) -> Polynomial:
        value = Fraction(value)
        return cls._raw({_ZERO_EXPS: value} if value else {})

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        exps = [0] * len(VARIABLES)
        exps[VAR_INDEX[name]] = 1
        return cls._raw({tuple(exps): _F1})

    @classmethod
    def monomial(cls, mono, coeff=1) -> Polynomial:
        if isinstance(mono, Monomial):
            mono = mono.exponents
        return cls({tuple(mono): coeff})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.const(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        index = VAR_INDEX[name]
        return max(exps[index] for exps in self._terms)

    def coeff(self, mono) -> Fraction:
        if isinstance(mono, Monomial):
            mono = mono.exponents
        return self._terms.get(tuple(mono), _F0)

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXPS, _F0)

    def leading_term(self):
        """(exponents, coefficient) of the graded-lex greatest term."""
        exps = max(self._terms, key=grlex_key)
        return exps, self._terms[exps]

    # -- ring arithmetic ----------------------------------------------------

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            value = out.get(exps, _F0) + coeff
            if value:
                out[exps] = value
            else:
                del out[exps]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return -(self - other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return Polynomial._raw(poly_mul_capped(self._terms, other._terms, -1, -1))
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, value) -> Polynomial:
        value = Fraction(value)
        if not value:
            return Polynomial.zero()
        return Polynomial._raw({exps: c * value for exps, c in self._terms.items()})

    def __pow__(self, power: int) -> Polynomial:
        if power < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial.one()
        for _ in range(power):
            result = result * self
        return result

    def mul_capped(self, other: Polynomial, cap_t: int, cap_s: int) -> Polynomial:
        return Polynomial._raw(
            poly_mul_capped(self._terms, other._terms, cap_t, cap_s)
        )

    def truncate(self, cap_t: int, cap_s: int) -> Polynomial:
        """Drop terms with t-exponent > cap_t or s-exponent > cap_s."""
        out = {
            exps: c
            for exps, c in self._terms.items()
            if exps[T_INDEX] <= cap_t and exps[S_INDEX] <= cap_s
        }
        return Polynomial._raw(out) if len(out) != len(self._terms) else self

    # -- substitution and evaluation -----------------------------------------

    def substitute_scale(self, name: str, value) -> Polynomial:
        """Replace ``name`` by ``value * name`` (value may be any rational)."""
        value = Fraction(value)
        index = VAR_INDEX[name]
        out: dict = {}
        for exps, coeff in self._terms.items():
            scaled = coeff * value ** exps[index] if exps[index] else coeff
            if scaled:
                out[exps] = scaled
        return Polynomial._raw(out)

    def substitute_var(self, name: str, new_name: str, value=1) -> Polynomial:
        """Replace ``name`` by ``value * new_name``."""
        value = Fraction(value)
        index = VAR_INDEX[name]
        target = VAR_INDEX[new_name]
        out: dict = {}
        for exps, coeff in self._terms.items():
            power = exps[index]
            if power:
                coeff = coeff * value**power
                moved = list(exps)
                moved[index] = 0
                moved[target] += power
                exps = tuple(moved)
            if coeff:
                prev = out.get(exps, _F0) + coeff
                if prev:
                    out[exps] = prev
                else:
                    del out[exps]
        return Polynomial._raw(out)

    def eval(self, assignment: Mapping) -> Fraction:
        """Exact evaluation; every occurring variable must be assigned."""
        values = {VAR_INDEX[name]: Fraction(v) for name, v in assignment.items()}
        total = _F0
        for exps, coeff in self._terms.items():
            term = coeff
            for index, power in enumerate(exps):
                if not power:
                    continue
                if index not in values:
                    raise MissingAssignment(
                        f"no value for variable {VARIABLES[index]!r}"
                    )
                term *= values[index] ** power
            total += term
        return total

    # -- text and serialization ----------------------------------------------

    def sorted_terms(self) -> Iterator:
        """(exponents, coefficient) pairs in graded-lex descending order."""
        for exps in sorted(self._terms, key=grlex_key, reverse=True):
            yield exps, self._terms[exps]

    def to_pairs(self) -> list:
        """JSON-ready [[exponents...], "coefficient"] pairs, canonical order."""
        return [[list(exps), str(coeff)] for exps, coeff in self.sorted_terms()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            body = _monomial_text(exps, abs(coeff))
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    _FACTOR_VAR = re.compile(r"([xyuvts])(?:\^(\d+))?")
    _FACTOR_NUM = re.compile(r"\d+(?:/\d+)?")

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        """Parse the canonical text form back into a polynomial."""
        src = text.strip()
        if not src:
            raise ValueError("empty polynomial text")
        if src == "0":
            return cls.zero()
        pieces = re.split(r"\s*([+-])\s*", src)
        if pieces[0] == "":
            pieces = pieces[1:]
        else:
            pieces = ["+"] + pieces
        if len(pieces) % 2 != 0:
            raise ValueError(f"cannot parse polynomial text: {text!r}")
        terms: dict = {}
        for sign, chunk in zip(pieces[0::2], pieces[1::2]):
            if not chunk:
                raise ValueError(f"cannot parse polynomial text: {text!r}")
            coeff = _F1 if sign == "+" else -_F1
            exps = [0] * len(VARIABLES)
            for factor in chunk.split("*"):
                factor = factor.strip()
                match = cls._FACTOR_VAR.fullmatch(factor)
                if match:
                    exps[VAR_INDEX[match.group(1)]] += int(match.group(2) or 1)
                    continue
                if cls._FACTOR_NUM.fullmatch(factor):
                    coeff *= Fraction(factor)
                    continue
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            key = tuple(exps)
            terms[key] = terms.get(key, _F0) + coeff
        return cls(terms)


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.const(value)
    return NotImplemented


def divide_exact(p: Polynomial, d: Polynomial) -> Polynomial:
    """Quotient r with p = d * r exactly, by graded-lex reduction against d.

    Raises NotDivisible (carrying the current nonzero remainder) when no exact
    quotient exists; this is a normal outcome for the partial divided
    difference operator, not a bug.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    d_exps, d_coeff = d.leading_term()
    d_items = tuple(d.terms.items())
    remainder = dict(p.terms)
    quotient: dict = {}
    while remainder:
        exps = max(remainder, key=grlex_key)
        q_exps = tuple(a - b for a, b in zip(exps, d_exps))
        if any(e < 0 for e in q_exps):
            raise NotDivisible(
                f"({p}) is not divisible by ({d})",
                remainder=Polynomial._raw(remainder),
            )
        q_coeff = remainder[exps] / d_coeff
        quotient[q_exps] = quotient.get(q_exps, _F0) + q_coeff
        for m_exps, m_coeff in d_items:
            key = tuple(a + b for a, b in zip(q_exps, m_exps))
            value = remainder.get(key, _F0) - q_coeff * m_coeff
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    return Polynomial._raw({k: v for k, v in quotient.items() if v})


X = Polynomial.variable("x")
Y = Polynomial.variable("y")
U = Polynomial.variable("u")
V = Polynomial.variable("v")
T = Polynomial.variable("t")
S = Polynomial.variable("s")
