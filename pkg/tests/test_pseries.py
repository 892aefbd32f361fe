import random
from fractions import Fraction as F

import pytest

from qhahn.errors import DenominatorPole, NonTerminating, NotInvertible
from qhahn.polyring import Polynomial
from qhahn.pseries import (
    ScaledMonomial,
    TruncatedSeries,
    euler_product,
    euler_recip,
    phi_series,
    pochhammer_poly,
)

Q = F(1, 2)
XT = ScaledMonomial.of(1, x=1, t=1)
YT = ScaledMonomial.of(1, y=1, t=1)
YS = ScaledMonomial.of(1, y=1, s=1)


def _series(text, cap_t, cap_s=0):
    return TruncatedSeries(Polynomial.parse(text), cap_t, cap_s)


def test_product_with_truncation():
    left = _series("1 + x*t", 2)
    right = _series("1 - x*t", 2)
    assert (left * right) == _series("1 - x^2*t^2", 2)
    f = _series("1 + x*t + x^2*t^2", 2)
    g = _series("1 + y*t", 1)
    assert f * g == _series("1 + x*t + y*t", 1)
    assert f + TruncatedSeries.zero(2, 0) == f


def test_caps_combine_at_minimum():
    f = _series("1 + x*t", 5, 3)
    g = _series("1 + y*s", 2, 7)
    product = f * g
    assert (product.cap_t, product.cap_s) == (2, 3)


def test_invert_geometric():
    inv = _series("1 - x*t", 3).invert()
    assert inv == _series("1 + x*t + x^2*t^2 + x^3*t^3", 3)


def test_invert_two_factor_product():
    body = Polynomial.parse("1 - 3/2*x*t + 1/2*x^2*t^2")  # (1-xt)(1-xt/2)
    inv = TruncatedSeries(body, 2, 0).invert()
    assert inv == _series("1 + 3/2*x*t + 7/4*x^2*t^2", 2)
    # multiply back: the defining property
    assert TruncatedSeries(body, 2, 0) * inv == TruncatedSeries.one(2, 0)


def test_invert_requires_constant_unit():
    with pytest.raises(NotInvertible):
        _series("x*t + 1 - 1", 2).invert()
    with pytest.raises(NotInvertible):
        _series("1 + x", 2).invert()  # t^0 s^0 coefficient is 1 + x


def test_invert_random_roundtrip():
    rng = random.Random(29)
    names = ("x", "y", "t", "s")
    for _ in range(100):
        terms = {(0, 0, 0, 0, 0, 0): F(rng.randint(1, 5))}
        for _ in range(rng.randint(1, 6)):
            exps = [0] * 6
            exps[4] = rng.randint(0, 3)
            exps[5] = rng.randint(0, 2)
            if exps[4] == exps[5] == 0:
                exps[4] = 1
            exps[rng.randrange(4)] = rng.randint(0, 2)
            terms[tuple(exps)] = F(rng.randint(-6, 6) or 1, rng.randint(1, 6))
        f = TruncatedSeries(Polynomial(terms), 4, 3)
        assert f * f.invert() == TruncatedSeries.one(4, 3)


def test_pochhammer_poly():
    assert pochhammer_poly(XT, Q, 0) == Polynomial.one()
    assert pochhammer_poly(XT, Q, 2) == Polynomial.parse(
        "1 - 3/2*x*t + 1/2*x^2*t^2"
    )
    assert pochhammer_poly(YS, Q, 1) == Polynomial.parse("1 - y*s")


def test_euler_expansions():
    assert euler_recip(XT, Q, 2, 0) == _series("1 + 2*x*t + 8/3*x^2*t^2", 2)
    # k = 1 coefficient is -1/(q;q)_1 = -2 at q = 1/2
    assert euler_product(YT, Q, 1, 0) == _series("1 - 2*y*t", 1)
    assert euler_product(YT, Q, 2, 0) == _series("1 - 2*y*t + 4/3*y^2*t^2", 2)
    assert euler_recip(ScaledMonomial.constant(0), Q, 3, 3) == TruncatedSeries.one(3, 3)


def test_euler_pair_mutually_inverse():
    for caps in ((0, 0), (4, 0), (6, 3)):
        recip = euler_recip(XT, Q, *caps)
        product = euler_product(XT, Q, *caps)
        assert recip * product == TruncatedSeries.one(*caps)


def test_euler_needs_series_content():
    with pytest.raises(NonTerminating):
        euler_recip(ScaledMonomial.of(1, x=1), Q, 4, 4)
    with pytest.raises(NonTerminating):
        euler_product(ScaledMonomial.of(F(1, 3)), Q, 4, 4)


def test_phi_one_one_first_order():
    phi = phi_series([F(1, 7)], [F(0)], Q, YT, 1, 0)
    assert phi == _series("1 - 12/7*y*t", 1)


def test_phi_q_binomial_theorem_shape():
    a = F(1, 7)
    lhs = phi_series([a], [], Q, XT, 5, 0)
    rhs = euler_product(XT.scaled(a), Q, 5, 0) * euler_recip(XT, Q, 5, 0)
    assert lhs == rhs


def test_phi_terminating_parameter():
    # upper parameter q^-2 kills every term past m = 2 regardless of caps
    z = ScaledMonomial.of(F(1, 3), t=1)
    phi = phi_series([Q**-2, F(1, 5), F(1, 7)], [F(1, 11), F(1, 13)], Q, z, 8, 8)
    assert phi.body.degree_in("t") == 2


def test_phi_terminating_rational_argument():
    value = phi_series([Q**-1], [], Q, ScaledMonomial.constant(F(1, 3)), 4, 4)
    # 1 + (1 - q^-1) * (1/3)/(q;q)_1 = 1 - 2/3
    assert value.body == Polynomial.const(F(1, 3))


def test_phi_refuses_unbounded():
    with pytest.raises(NonTerminating):
        phi_series([F(1, 3)], [], Q, ScaledMonomial.of(1, x=1), 4, 4)


def test_phi_denominator_pole():
    with pytest.raises(DenominatorPole):
        phi_series([F(1, 3)], [Q**-2], Q, XT, 8, 0)


def test_phi_monomial_denominator_needs_unit():
    with pytest.raises(NotInvertible):
        phi_series([F(1, 3)], [ScaledMonomial.of(1, x=1)], Q, XT, 4, 0)


def test_truncation_is_ring_homomorphism():
    rng = random.Random(31)
    for _ in range(40):
        terms_a = {}
        terms_b = {}
        for terms in (terms_a, terms_b):
            for _ in range(6):
                exps = [0] * 6
                exps[0] = rng.randint(0, 2)
                exps[4] = rng.randint(0, 5)
                exps[5] = rng.randint(0, 5)
                terms[tuple(exps)] = F(rng.randint(-9, 9) or 1)
        a = Polynomial(terms_a)
        b = Polynomial(terms_b)
        capped = TruncatedSeries(a, 3, 2) * TruncatedSeries(b, 3, 2)
        assert capped.body == (a * b).truncate(3, 2)


def test_series_text_form():
    f = _series("1 - x*t", 3, 0)
    assert str(f) == "-x*t + 1 (+O(t^4) + O(s^1))"
    assert f.to_pairs() == [[[1, 0, 0, 0, 1, 0], "-1"], [[0, 0, 0, 0, 0, 0], "1"]]
