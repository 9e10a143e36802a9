from fractions import Fraction

import pytest

from zetalab.exact import (ALPHA, ONE, RationalPoly, binomial, format_rational, parse_rational,
                           poly_add, poly_antiderivative, poly_derivative, poly_eval,
                           poly_integrate_01, poly_mul, poly_neg, poly_scale, poly_shift,
                           poly_shift_by, poly_shift_inverse, poly_sub, to_rational)


@pytest.mark.parametrize("n, k, expected", [
    (0, 0, 1), (7, 0, 1), (5, 2, 10), (3, 5, 0), (10, 10, 1), (52, 5, 2598960),
])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal_rule():
    for n in range(1, 40):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@pytest.mark.parametrize("value, text", [
    (Fraction(-1, 12), "-1/12"), (Fraction(3, 1), "3"), (Fraction(0), "0"),
    (Fraction(-691, 2730), "-691/2730"),
])
def test_format_rational(value, text):
    assert format_rational(value) == text
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1/0", "a/b", "1/2/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_to_rational_rejects_float_and_bool():
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational(True)


def test_canonical_form_drops_leading_zeros():
    p = RationalPoly.from_coeffs([1, 2, 0, 0])
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert RationalPoly.from_coeffs([0, 0]).degree == -1
    assert RationalPoly.from_coeffs([0, 0]) == RationalPoly()


def test_poly_mul_examples():
    half = ALPHA - RationalPoly.constant(Fraction(1, 2))
    assert poly_mul(half, half) == RationalPoly.from_coeffs([Fraction(1, 4), -1, 1])
    assert poly_mul(half, ONE) == half
    assert poly_mul(half, RationalPoly()).is_zero()


@pytest.mark.parametrize("coeffs, expected", [
    ([1], Fraction(1)),
    ([Fraction(-1, 2), 1], Fraction(0)),
    ([0, 0, 1], Fraction(1, 3)),
])
def test_integrate_01(coeffs, expected):
    assert poly_integrate_01(RationalPoly.from_coeffs(coeffs)) == expected


def test_shift_examples():
    assert poly_shift(ALPHA) == RationalPoly.from_coeffs([1, 1])
    assert poly_shift(RationalPoly.monomial(2)) == RationalPoly.from_coeffs([1, 2, 1])
    c = RationalPoly.constant(Fraction(5, 7))
    assert poly_shift(c) == c


def test_shift_inverse_undoes_shift():
    p = RationalPoly.from_coeffs([Fraction(1, 6), -1, 1, 3])
    assert poly_shift_inverse(poly_shift(p)) == p
    assert poly_shift_by(p, Fraction(1, 2))(0) == p(Fraction(1, 2))


def test_evaluation_examples():
    b2 = RationalPoly.from_coeffs([Fraction(1, 6), -1, 1])
    assert b2(0) == Fraction(1, 6)
    assert b2(Fraction(1, 4)) == Fraction(-1, 48)
    assert RationalPoly.from_coeffs([Fraction(-1, 2), 1])(Fraction(1, 2)) == 0


def test_derivative_and_antiderivative():
    p = RationalPoly.from_coeffs([3, 0, Fraction(1, 2), 4])
    assert p.antiderivative().derivative() == p
    assert p.derivative() == RationalPoly.from_coeffs([0, 1, 12])


def test_str_and_json():
    b2 = RationalPoly.from_coeffs([Fraction(1, 6), -1, 1])
    assert str(b2) == "a^2 - a + 1/6"
    assert str(RationalPoly()) == "0"
    assert b2.to_json() == ["1/6", "-1", "1"]
    assert RationalPoly.from_json(b2.to_json()) == b2


def test_division_by_zero_scalar():
    with pytest.raises(ZeroDivisionError):
        ALPHA / 0


def test_functional_helpers_match_operators():
    p = RationalPoly.from_coeffs([1, Fraction(-1, 2), 3])
    q = RationalPoly.from_coeffs([0, 2])
    assert poly_add(p, q) == p + q
    assert poly_sub(p, q) == RationalPoly.from_coeffs([1, Fraction(-5, 2), 3])
    assert poly_sub(p, p).is_zero()
    assert poly_neg(q) == RationalPoly.from_coeffs([0, -2])
    assert poly_scale(p, Fraction(2, 3)) == RationalPoly.from_coeffs([Fraction(2, 3), Fraction(-1, 3), 2])
    assert poly_eval(p, 2) == Fraction(12)
    assert poly_derivative(poly_antiderivative(p)) == p
    assert poly_antiderivative(p)(0) == 0
