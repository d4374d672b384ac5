from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from trisect.scalar import (
    HALF, ONE, SQRT2, SQRT3, SQRT6, ZERO, OutsideFieldError, Scalar, sqrt_rational, sqrt_scalar,
)
from oracles import fixed, mp_value

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)
scalars = st.builds(Scalar, fractions, fractions, fractions, fractions)
nonzero = scalars.filter(lambda s: not s.is_zero())


def test_basis_products():
    assert SQRT2 * SQRT2 == 2
    assert SQRT3 * SQRT3 == 3
    assert SQRT2 * SQRT3 == SQRT6
    assert SQRT6 * SQRT6 == 6
    assert SQRT6 * SQRT2 == 2 * SQRT3


def test_inverse_of_sum_of_roots():
    x = SQRT2 + SQRT3
    assert x * x.inv() == ONE
    assert x.inv() == SQRT3 - SQRT2


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.a = 2


def test_rejects_floats():
    with pytest.raises(TypeError):
        Scalar(0.5)


def test_equality_with_rationals():
    assert Scalar(Fraction(1, 2)) == HALF == Fraction(1, 2)
    assert Scalar(3) == 3
    assert hash(Scalar(3)) == hash(Scalar("3"))


def test_ordering_close_values():
    # 5*sqrt2 and sqrt3*sqrt(50/3) agree to many digits only if exact
    a = Scalar(Fraction(1414213562373095, 10 ** 15))
    assert a < SQRT2
    assert SQRT2 - a > 0
    assert (SQRT2 + SQRT3) ** 2 == 5 + 2 * SQRT6


def test_sign_of_tiny_difference():
    # sqrt2 + sqrt3 - pi-ish rational: decided by refinement, not floats
    q = Scalar(Fraction(314626436994197, 10 ** 14))
    assert (SQRT2 + SQRT3 - q).sign() == (1 if mp_value((0, 1, 1, 0)) > mpmath.mpf(q.a.numerator) / q.a.denominator else -1)


def test_floor_large():
    x = SQRT3 * 10 ** 36
    assert x.floor() == int(mpmath.floor(mpmath.sqrt(3) * mpmath.mpf(10) ** 36))


def test_to_decimal_rounding():
    assert Scalar(Fraction(1, 8)).to_decimal(2) == "0.13"
    assert Scalar(Fraction(-1, 8)).to_decimal(2) == "-0.13"
    assert SQRT2.to_decimal(6) == "1.414214"
    assert ZERO.to_decimal(3) == "0.000"
    with pytest.raises(ValueError):
        ONE.to_decimal(0)


def test_str():
    assert str(ZERO) == "0"
    assert str(SQRT3 - 1) == "-1 + √3"
    assert str(SQRT6 / 3) == "(1/3)√6"


@pytest.mark.parametrize("q, root", [
    (0, ZERO), (4, Scalar(2)), (2, SQRT2), (Fraction(3, 4), SQRT3 / 2),
    (Fraction(2, 3), SQRT6 / 3), (24, 2 * SQRT6),
])
def test_sqrt_rational(q, root):
    assert sqrt_rational(q) == root


def test_sqrt_rational_outside():
    with pytest.raises(OutsideFieldError):
        sqrt_rational(5)
    with pytest.raises(OutsideFieldError):
        sqrt_rational(-1)


@pytest.mark.parametrize("x, root", [
    (4 - 2 * SQRT3, SQRT3 - 1),
    (5 + 2 * SQRT6, SQRT2 + SQRT3),
    (2 + SQRT3, (SQRT6 + SQRT2) / 2),
    (3 - 2 * SQRT2, SQRT2 - 1),
])
def test_sqrt_scalar(x, root):
    assert sqrt_scalar(x) == root


def test_sqrt_scalar_outside():
    with pytest.raises(OutsideFieldError):
        sqrt_scalar(SQRT2)


def test_conjugates_multiply_to_rational():
    x = Scalar(1, 2, 3, 4)
    norm = x * x.conjugate(flip2=True) * x.conjugate(flip3=True) * x.conjugate(True, True)
    assert norm.is_rational()


@settings(max_examples=300, deadline=None)
@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=200, deadline=None)
@given(nonzero)
def test_inverse(a):
    assert a * a.inv() == ONE
    assert ONE / a == a.inv()


@settings(max_examples=200, deadline=None)
@given(scalars, scalars)
def test_order_matches_high_precision(a, b):
    diff = mp_value(a.coeffs) - mp_value(b.coeffs)
    expected = 0 if a == b else (1 if diff > 0 else -1)
    assert (a - b).sign() == expected
    assert (a < b) == (expected < 0)


@settings(max_examples=200, deadline=None)
@given(scalars)
def test_decimal_matches_high_precision(a):
    assert a.to_decimal(6) == fixed(mp_value(a.coeffs), 6)
    assert a.floor() == int(mpmath.floor(mp_value(a.coeffs)))
