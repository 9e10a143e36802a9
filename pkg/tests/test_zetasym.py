import math
from fractions import Fraction

import mpmath
import pytest

from zetalab.errors import DomainViolation, PoleHit
from zetalab.exact import RationalPoly, poly_shift
from zetalab.zetasym import (MZVSpec, ZetaCombination, hurwitz_neg_poly, hurwitz_neg_poly_shifted,
                             hurwitz_neg_via_lemma3, mzv_eval_exact, mzv_eval_numeric,
                             mzv_level_polys, mzv_reduce, mzv_theorem_general, mzv_theorem_k3,
                             zeta_even_pi_coefficient, zeta_neg)


def test_hurwitz_neg_poly_examples():
    assert hurwitz_neg_poly(0) == RationalPoly.from_coeffs([Fraction(1, 2), -1])
    assert hurwitz_neg_poly(1) == RationalPoly.from_coeffs([Fraction(-1, 12), Fraction(1, 2),
                                                            Fraction(-1, 2)])
    assert hurwitz_neg_poly(1)(1) == Fraction(-1, 12)


def test_hurwitz_neg_poly_shifted_examples():
    assert hurwitz_neg_poly_shifted(0) == RationalPoly.from_coeffs([Fraction(-1, 2), -1])
    for m in range(12):
        assert hurwitz_neg_poly_shifted(m) == poly_shift(hurwitz_neg_poly(m))


@pytest.mark.parametrize("m", range(0, 31))
def test_construction_from_zeta_values(m):
    assert hurwitz_neg_via_lemma3(m) == hurwitz_neg_poly(m)


def test_hurwitz_forward_difference():
    for m in range(15):
        assert hurwitz_neg_poly(m) - hurwitz_neg_poly_shifted(m) == RationalPoly.monomial(m)


@pytest.mark.parametrize("m, expected", [
    (0, Fraction(-1, 2)), (1, Fraction(-1, 12)), (2, Fraction(0)), (3, Fraction(1, 120)),
])
def test_zeta_neg(m, expected):
    assert zeta_neg(m) == expected


def test_zeta_neg_matches_mpmath():
    for m in range(0, 16):
        assert float(zeta_neg(m)) == pytest.approx(float(mpmath.zeta(-m)), rel=1e-13, abs=1e-15)


def test_zeta_even_pi_coefficient():
    assert zeta_even_pi_coefficient(1) == Fraction(1, 6)
    assert zeta_even_pi_coefficient(2) == Fraction(1, 90)
    assert zeta_even_pi_coefficient(3) == Fraction(1, 945)


def test_mzv_spec_validation():
    assert MZVSpec.parse("0,2").trailing_args == (0, 2)
    assert MZVSpec((0, 2)).k == 3
    assert str(MZVSpec((0, 0))) == "zeta_3(s1, -0, -0)"
    with pytest.raises(ValueError):
        MZVSpec((0, -1))


def test_reduce_examples():
    assert mzv_reduce(MZVSpec(())) == ZetaCombination.from_dict({0: Fraction(1)})
    assert mzv_reduce(MZVSpec((0,))) == ZetaCombination.from_dict({1: Fraction(-1),
                                                                  0: Fraction(-1, 2)})
    assert mzv_reduce(MZVSpec((0, 0))) == ZetaCombination.from_dict(
        {2: Fraction(1, 2), 1: Fraction(1), 0: Fraction(1, 3)})


def test_level_polys_for_two_levels():
    top, bottom = mzv_level_polys(MZVSpec((0, 0)))
    assert top == hurwitz_neg_poly_shifted(0)
    assert bottom == RationalPoly.from_coeffs([Fraction(1, 3), 1, Fraction(1, 2)])


@pytest.mark.parametrize("args", [(0,), (3,), (0, 0), (2, 1), (0, 0, 0), (1, 0, 2), (2, 1, 0, 1),
                                  (0, 0, 0, 0, 0)])
def test_level_degrees_and_shift_bound(args):
    spec = MZVSpec(args)
    k = spec.k
    levels = mzv_level_polys(spec)
    assert len(levels) == k - 1
    for offset, level in enumerate(levels):
        j = k - offset
        assert level.degree == (k - j + 1) + sum(args[j - 2:])

    combination = mzv_reduce(spec)
    top = (k - 1) + sum(args)
    assert all(0 <= e <= top for e in combination.shifts)
    assert max(combination.shifts) == top
    expected = Fraction(1)
    for level in levels:
        expected *= Fraction(-1, level.degree)
    assert combination.coefficient(top) == expected


@pytest.mark.parametrize("k", range(2, 8))
def test_top_coefficient_for_zero_arguments(k):
    combination = mzv_reduce(MZVSpec((0,) * (k - 1)))
    assert max(combination.shifts) == k - 1
    assert combination.coefficient(k - 1) == Fraction((-1) ** (k - 1), math.factorial(k - 1))


def test_combination_rendering_and_json():
    combination = mzv_reduce(MZVSpec((0, 0)))
    assert str(combination) == "1/2*zeta(s1-2) + zeta(s1-1) + 1/3*zeta(s1)"
    assert combination.to_json() == {"terms": [{"shift": 2, "coeff": "1/2"},
                                               {"shift": 1, "coeff": "1"},
                                               {"shift": 0, "coeff": "1/3"}]}
    assert ZetaCombination.from_json(combination.to_json()) == combination


def test_combination_drops_zero_coefficients():
    combination = ZetaCombination.from_dict({3: Fraction(0), 1: Fraction(2)})
    assert combination.shifts == [1]
    assert combination.coefficient(3) == 0


@pytest.mark.parametrize("m2", range(0, 6))
@pytest.mark.parametrize("m3", range(0, 6))
def test_theorem_k3_matches_recursion(m2, m3):
    assert mzv_theorem_k3(m2, m3) == mzv_reduce(MZVSpec((m2, m3)))


@pytest.mark.parametrize("args", [(), (0,), (3,), (0, 0), (2, 1), (0, 0, 0), (1, 0, 2),
                                  (2, 1, 0, 1)])
def test_general_nested_formula_matches_recursion(args):
    spec = MZVSpec(args)
    assert mzv_theorem_general(spec) == mzv_reduce(spec)


def test_eval_exact_examples():
    assert mzv_eval_exact(MZVSpec((0, 0)), 0) == Fraction(-1, 4)
    assert mzv_eval_exact(MZVSpec(()), 1) == Fraction(-1, 12)
    assert mzv_eval_exact(MZVSpec((0,)), 0) == Fraction(1, 3)


def test_eval_numeric_matches_exact():
    assert mzv_eval_numeric(MZVSpec((0, 0)), 0).real == pytest.approx(-0.25, abs=1e-9)
    for m1 in range(4):
        exact = float(mzv_eval_exact(MZVSpec((1, 0)), m1))
        assert mzv_eval_numeric(MZVSpec((1, 0)), -m1).real == pytest.approx(exact, abs=1e-9)


@pytest.mark.parametrize("args", [(0,), (0, 0), (0, 1)])
def test_eval_numeric_complex_matches_mpmath(args):
    s1 = complex(-0.5, 2.0)
    combination = mzv_reduce(MZVSpec(args))
    expected = sum(complex(mpmath.zeta(s1 - e)) * float(c) for e, c in combination.terms)
    assert abs(mzv_eval_numeric(MZVSpec(args), s1) - expected) <= 1e-8 * max(1.0, abs(expected))


def test_eval_numeric_pole_and_domain():
    with pytest.raises(PoleHit):
        mzv_eval_numeric(MZVSpec((0,)), 2)
    # s1 = 3 tombe aussi sur le pôle du décalage 2 ; PoleHit est une DomainViolation
    with pytest.raises(DomainViolation):
        mzv_eval_numeric(MZVSpec((0, 0)), 3)
    with pytest.raises(DomainViolation):
        mzv_eval_numeric(MZVSpec(()), 4)
