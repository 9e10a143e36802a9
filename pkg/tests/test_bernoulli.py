from fractions import Fraction

import mpmath
import pytest

from zetalab.bernoulli import (BernoulliTable, bernoulli_bar, bernoulli_bar_poly, bernoulli_number,
                               bernoulli_numbers, bernoulli_poly, check_generating_function,
                               generating_function_series)
from zetalab.exact import RationalPoly, poly_shift


@pytest.mark.parametrize("n, expected", [
    (0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, Fraction(0)),
    (4, Fraction(-1, 30)), (12, Fraction(-691, 2730)),
])
def test_bernoulli_number_values(n, expected):
    assert bernoulli_number(n) == expected


def test_bernoulli_numbers_match_mpmath():
    # mpmath utilise aussi B_1 = -1/2
    for n, value in enumerate(bernoulli_numbers(40)):
        assert float(value) == pytest.approx(float(mpmath.bernoulli(n)), rel=1e-14, abs=1e-300)


def test_recurrence_holds():
    from zetalab.exact import binomial
    values = bernoulli_numbers(30)
    for n in range(1, 30):
        assert sum(binomial(n + 1, k) * values[k] for k in range(n + 1)) == 0


def test_odd_numbers_vanish():
    assert all(bernoulli_number(n) == 0 for n in range(3, 60, 2))


def test_table_extends_on_demand():
    table = BernoulliTable()
    assert len(table) == 1
    assert table[6] == Fraction(1, 42)
    assert len(table) == 7
    with pytest.raises(ValueError):
        table[-1]


@pytest.mark.parametrize("n, expected", [
    (0, Fraction(1)), (1, Fraction(1, 2)), (4, Fraction(-1, 30)),
])
def test_bernoulli_bar(n, expected):
    assert bernoulli_bar(n) == expected


def test_bernoulli_poly_examples():
    assert bernoulli_poly(0) == RationalPoly.constant(1)
    assert bernoulli_poly(1) == RationalPoly.from_coeffs([Fraction(-1, 2), 1])
    assert bernoulli_poly(2) == RationalPoly.from_coeffs([Fraction(1, 6), -1, 1])


def test_bernoulli_bar_poly_examples():
    assert bernoulli_bar_poly(0) == RationalPoly.constant(1)
    assert bernoulli_bar_poly(1) == RationalPoly.from_coeffs([Fraction(1, 2), 1])
    assert bernoulli_bar_poly(2) == RationalPoly.from_coeffs([Fraction(1, 6), 1, 1])


@pytest.mark.parametrize("m", range(0, 21))
def test_polynomial_identities(m):
    p = bernoulli_poly(m)
    assert p.degree == m
    assert p.coefficient(m) == 1
    assert p(0) == bernoulli_number(m)
    assert p(1) == bernoulli_bar(m)
    assert bernoulli_bar_poly(m) == poly_shift(p)
    expected_step = RationalPoly.monomial(m - 1, m) if m else RationalPoly()
    assert poly_shift(p) - p == expected_step
    if m >= 1:
        assert p.integrate_01() == 0
        assert p.derivative() == bernoulli_poly(m - 1) * m


def test_generating_function_matches_polynomials():
    series = generating_function_series(10)
    assert series[0] == RationalPoly.constant(1)
    assert series[3] == bernoulli_poly(3) / 6
    assert check_generating_function(16) == []
