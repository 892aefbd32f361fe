from fractions import Fraction as F

import pytest

from qhahn.qkernel import (
    format_rational,
    gauss_power,
    q_binomial,
    q_factorial,
    q_number,
    q_pochhammer,
    rational,
)


def test_pochhammer_values():
    assert q_pochhammer(F(1, 2), F(1, 2), 0) == 1
    assert q_pochhammer(F(1, 2), F(1, 2), 2) == F(3, 8)
    assert q_pochhammer(F(1, 2), F(1, 2), 3) == F(21, 64)


@pytest.mark.parametrize("a,q", [(F(1, 3), F(1, 2)), (F(-2, 5), F(2, 3)), (F(3), F(1, 5))])
def test_pochhammer_recurrence(a, q):
    for n in range(10):
        assert q_pochhammer(a, q, n + 1) == q_pochhammer(a, q, n) * (1 - a * q**n)


def test_q_binomial_values():
    assert q_binomial(5, 0, F(1, 2)) == 1
    assert q_binomial(2, 1, F(1, 2)) == F(3, 2)
    assert q_binomial(2, 1, F(2, 3)) == 1 + F(2, 3)
    assert q_binomial(4, 2, F(1, 2)) == F(35, 16)


def test_q_binomial_symmetry_and_pascal():
    q = F(2, 3)
    for n in range(1, 9):
        for k in range(n + 1):
            assert q_binomial(n, k, q) == q_binomial(n, n - k, q)
        for k in range(1, n):
            lhs = q_binomial(n, k, q)
            rhs = q_binomial(n - 1, k - 1, q) + q**k * q_binomial(n - 1, k, q)
            assert lhs == rhs


def test_q_binomial_pochhammer_oracle():
    # independent route: (q;q)_n / ((q;q)_k (q;q)_{n-k})
    for q in (F(1, 2), F(2, 3)):
        for n in range(13):
            for k in range(n + 1):
                oracle = q_pochhammer(q, q, n) / (
                    q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k)
                )
                assert q_binomial(n, k, q) == oracle


def test_q_binomial_rejects_k_above_n():
    with pytest.raises(IndexError):
        q_binomial(3, 4, F(1, 2))


def test_q_number_factorial_values():
    assert q_factorial(0, F(1, 2)) == 1
    assert q_number(3, F(1, 2)) == F(7, 4)
    assert q_factorial(2, F(1, 2)) == F(3, 2)


def test_q_number_at_one_divides_by_zero():
    with pytest.raises(ZeroDivisionError):
        q_number(2, 1)
    with pytest.raises(ZeroDivisionError):
        q_factorial(2, 1)


def test_gauss_power():
    assert gauss_power(0, F(1, 2)) == 1
    assert gauss_power(1, F(1, 2)) == 1
    assert gauss_power(3, F(1, 2)) == F(1, 8)
    assert gauss_power(4, F(2, 3)) == F(64, 729)
    for k in range(1, 8):
        q = F(3, 5)
        assert gauss_power(k, q) / gauss_power(k - 1, q) == q ** (k - 1)


def test_rational_text_forms():
    assert rational("3/7") == F(3, 7)
    assert rational("-2") == F(-2)
    assert rational(" 5/10 ") == F(1, 2)
    assert format_rational(F(-3, 9)) == "-1/3"
    assert format_rational(F(4, 2)) == "2"
    with pytest.raises(ValueError):
        rational("1.5")
    with pytest.raises(TypeError):
        rational(0.5)
