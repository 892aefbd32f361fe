import random
from fractions import Fraction as F

import pytest

from qhahn._accel import BACKEND, _polymul_py

try:
    from qhahn._accel import _polymul_c
except ImportError:
    _polymul_c = None

needs_compiled = pytest.mark.skipif(
    _polymul_c is None, reason="compiled kernel not built"
)


def _random_terms(rng, size, max_exp=6):
    terms = {}
    for _ in range(size):
        key = tuple(rng.randint(0, max_exp) for _ in range(6))
        terms[key] = F(rng.randint(-20, 20) or 1, rng.randint(1, 12))
    return terms


def test_backend_is_reported():
    assert BACKEND in ("c", "python")


@needs_compiled
def test_backends_agree_uncapped():
    rng = random.Random(17)
    for _ in range(30):
        a = _random_terms(rng, rng.randint(1, 12))
        b = _random_terms(rng, rng.randint(1, 12))
        assert _polymul_c.poly_mul_capped(a, b) == _polymul_py.poly_mul_capped(a, b)


@needs_compiled
def test_backends_agree_capped():
    rng = random.Random(23)
    for _ in range(30):
        a = _random_terms(rng, rng.randint(1, 12))
        b = _random_terms(rng, rng.randint(1, 12))
        cap_t = rng.randint(0, 8)
        cap_s = rng.randint(0, 8)
        assert _polymul_c.poly_mul_capped(a, b, cap_t, cap_s) == (
            _polymul_py.poly_mul_capped(a, b, cap_t, cap_s)
        )


@needs_compiled
def test_compiled_kernel_oversize_exponent_falls_back():
    a = {(600, 0, 0, 0, 0, 0): F(1, 3)}
    b = {(600, 0, 0, 0, 0, 0): F(3, 5)}
    expected = {(1200, 0, 0, 0, 0, 0): F(1, 5)}
    assert _polymul_c.poly_mul_capped(a, b) == expected


def test_cancellation_drops_terms():
    a = {(1, 0, 0, 0, 0, 0): F(1), (0, 1, 0, 0, 0, 0): F(1)}
    b = {(1, 0, 0, 0, 0, 0): F(1), (0, 1, 0, 0, 0, 0): F(-1)}
    # (x + y)(x - y) = x^2 - y^2: the xy terms cancel exactly
    result = _polymul_py.poly_mul_capped(a, b)
    assert result == {(2, 0, 0, 0, 0, 0): F(1), (0, 2, 0, 0, 0, 0): F(-1)}
    if _polymul_c is not None:
        assert _polymul_c.poly_mul_capped(a, b) == result
