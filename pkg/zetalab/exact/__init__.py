"""
Module d'arithmétique exacte

- BigRational / binomial / format_rational : rationnels exacts
- RationalPoly : polynômes à coefficients rationnels
"""

from .rational import BigRational, binomial, format_rational, parse_rational, to_rational
from .polynomial import (RationalPoly, ALPHA, ONE, ZERO, poly_add, poly_sub, poly_neg,
                         poly_scale, poly_mul, poly_eval, poly_integrate_01, poly_derivative,
                         poly_antiderivative, poly_shift, poly_shift_by, poly_shift_inverse)

__all__ = ['BigRational', 'binomial', 'format_rational', 'parse_rational', 'to_rational',
           'RationalPoly', 'ALPHA', 'ONE', 'ZERO', 'poly_add', 'poly_sub', 'poly_neg',
           'poly_scale', 'poly_mul', 'poly_eval', 'poly_integrate_01', 'poly_derivative',
           'poly_antiderivative', 'poly_shift', 'poly_shift_by', 'poly_shift_inverse']
