import math
from fractions import Fraction

import mpmath
import pytest

from zetalab.bernoulli import bernoulli_poly
from zetalab.errors import DomainViolation, PoleHit
from zetalab.numerics import (EulerMaclaurinParams, bernoulli_function, gamma, hurwitz_shift_defect,
                              hurwitz_zeta_num, riemann_zeta_num)
from zetalab.zetasym import MZVSpec, hurwitz_neg_poly, mzv_eval_numeric, mzv_reduce


@pytest.mark.parametrize("z, expected", [
    (1, 1.0), (5, 24.0), (0.5, math.sqrt(math.pi)), (-0.5, -2 * math.sqrt(math.pi)),
])
def test_gamma_real_values(z, expected):
    assert gamma(z).real == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("z", [2 + 3j, 0.25 - 1j, -1.5 + 0.5j])
def test_gamma_complex_matches_mpmath(z):
    assert abs(gamma(z) - complex(mpmath.gamma(z))) <= 1e-11 * abs(complex(mpmath.gamma(z)))


@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_poles(z):
    with pytest.raises(PoleHit):
        gamma(z)


def test_em_params():
    assert EulerMaclaurinParams.for_argument(3 + 40j).head_terms == 56
    assert EulerMaclaurinParams.for_argument(-2).head_terms == 16
    with pytest.raises(ValueError):
        EulerMaclaurinParams(head_terms=4)
    with pytest.raises(ValueError):
        EulerMaclaurinParams(correction_order=0)


def test_hurwitz_examples():
    assert hurwitz_zeta_num(2, 1).real == pytest.approx(math.pi ** 2 / 6, abs=1e-10)
    assert hurwitz_zeta_num(0, 0.3).real == pytest.approx(0.2, abs=1e-12)
    expected = float(hurwitz_neg_poly(3)(Fraction(1, 2)))
    assert hurwitz_zeta_num(-3, 0.5).real == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("m", range(0, 11))
@pytest.mark.parametrize("alpha", [0.1, 0.25, 0.5, 0.9, 1.0, 2.5])
def test_hurwitz_at_negative_integers(m, alpha):
    expected = float(hurwitz_neg_poly(m)(Fraction(alpha)))
    assert abs(hurwitz_zeta_num(-m, alpha) - expected) <= 1e-10


@pytest.mark.parametrize("s", [0.5 + 3j, 2.5 - 1j, -0.3, -2.5 + 1j, 0.75 + 20j])
@pytest.mark.parametrize("alpha", [0.2, 1.0, 3.7])
def test_hurwitz_matches_mpmath(s, alpha):
    expected = complex(mpmath.zeta(s, alpha))
    assert abs(hurwitz_zeta_num(s, alpha) - expected) <= 1e-9 * max(1.0, abs(expected))


@pytest.mark.parametrize("s, alpha", [
    (-5.5, 0.5), (-5.5, 0.1), (-7.5, 1.0), (-10.5, 0.3), (-19.5, 0.75),
    (-12.3 + 2j, 3.7), (-3.5 + 1j, 2.5), (-2.7 - 0.5j, 0.9), (-15, 0.4), (-25, 0.6),
])
def test_hurwitz_very_negative_real_part(s, alpha):
    with mpmath.workdps(40):
        expected = complex(mpmath.zeta(s, alpha))
    assert abs(hurwitz_zeta_num(s, alpha) - expected) <= 1e-10 * max(1.0, abs(expected))


@pytest.mark.parametrize("s, alpha", [
    (2, 0.5), (0.5 + 3j, 0.3), (-0.5, 0.9), (-1 + 0.5j, 0.4), (3 + 2j, 2.5),
    (-3, 0.25), (-5.5, 0.5), (-7.5, 0.8), (-12.3 + 2j, 3.7),
])
def test_em_parameters_reach_plateau(s, alpha):
    reference = hurwitz_zeta_num(s, alpha, EulerMaclaurinParams(16, 12))
    for params in (EulerMaclaurinParams(32, 12), EulerMaclaurinParams(16, 20)):
        assert abs(hurwitz_zeta_num(s, alpha, params) - reference) <= 1e-11


def test_mzv_numeric_below_critical_strip():
    s1 = -3.5
    with mpmath.workdps(40):
        expected = float(sum(mpmath.mpf(c.numerator) / c.denominator * mpmath.zeta(s1 - e)
                             for e, c in mzv_reduce(MZVSpec((2, 2))).terms))
    value = mzv_eval_numeric(MZVSpec((2, 2)), s1)
    assert value.real == pytest.approx(expected, rel=1e-9)
    assert abs(value.imag) <= 1e-12


def test_hurwitz_errors():
    with pytest.raises(PoleHit):
        hurwitz_zeta_num(1, 0.5)
    with pytest.raises(DomainViolation):
        hurwitz_zeta_num(2, 0)
    with pytest.raises(DomainViolation):
        hurwitz_zeta_num(float("nan"), 0.5)


@pytest.mark.parametrize("s, expected", [
    (-1, -1 / 12), (0, -0.5), (4, math.pi ** 4 / 90),
])
def test_riemann_examples(s, expected):
    assert riemann_zeta_num(s).real == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("s, alpha", [
    (-2.5 + 1j, 0.75), (0.5 + 3j, 0.75), (2.5 - 1j, 0.75), (-4.5, 0.25),
    (-5 + 0.5j, 0.25), (-2.4, 0.7), (-3.7 - 2j, 1.5), (4.5 - 1j, 0.25),
])
def test_forward_shift_defect_is_small(s, alpha):
    assert abs(hurwitz_shift_defect(s, alpha)) <= 1e-10


def test_bernoulli_function_examples():
    assert bernoulli_function(0, 0.3) == 1
    assert bernoulli_function(-2, 0.25).real == pytest.approx(-1 / 48, abs=1e-9)
    assert abs(bernoulli_function(1e-6, 0.7) - 1) <= 1e-4


@pytest.mark.parametrize("m", range(0, 9))
def test_bernoulli_function_interpolates_polynomials(m):
    for alpha in (0.25, 0.7, 1.5):
        expected = float(bernoulli_poly(m)(Fraction(alpha)))
        assert abs(bernoulli_function(-m, alpha) - expected) <= 1e-9
