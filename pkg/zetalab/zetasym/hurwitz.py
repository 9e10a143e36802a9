"""
Zêta de Hurwitz aux entiers négatifs ou nuls, sous forme polynomiale

ζ(-m, α) = -B_{m+1}(α)/(m+1) et ζ(-m, α+1) = -B̄_{m+1}(α)/(m+1).
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from zetalab.bernoulli import bernoulli_bar, bernoulli_bar_poly, bernoulli_number, bernoulli_poly
from zetalab.exact import RationalPoly, binomial


def _check_index(m: int):
    if m < 0:
        raise ValueError(f"m doit être >= 0 (reçu {m})")


@lru_cache(maxsize=None)
def hurwitz_neg_poly(m: int) -> RationalPoly:
    """
    ζ(-m, α) comme polynôme de degré m + 1 en α

    Example:
        >>> str(hurwitz_neg_poly(0))
        '-a + 1/2'
    """
    _check_index(m)
    return -bernoulli_poly(m + 1) / (m + 1)


@lru_cache(maxsize=None)
def hurwitz_neg_poly_shifted(m: int) -> RationalPoly:
    """ζ(-m, α + 1) = -B̄_{m+1}(α)/(m+1)"""
    _check_index(m)
    return -bernoulli_bar_poly(m + 1) / (m + 1)


def zeta_neg(m: int) -> Fraction:
    """ζ(-m) = -B̄_{m+1}/(m+1), exact"""
    _check_index(m)
    return -bernoulli_bar(m + 1) / (m + 1)


def hurwitz_neg_via_lemma3(m: int) -> RationalPoly:
    """
    ζ(-m, α) construit terme à terme à partir des valeurs ζ(-k) :
    Σ_{k=0}^{m} C(m, k) ζ(-k) α^{m-k} + α^m - α^{m+1}/(m+1)
    """
    _check_index(m)
    coeffs = [Fraction(0)] * (m + 2)
    for k in range(m + 1):
        coeffs[m - k] += binomial(m, k) * zeta_neg(k)
    coeffs[m] += 1
    coeffs[m + 1] -= Fraction(1, m + 1)
    return RationalPoly(tuple(coeffs))


def zeta_even_pi_coefficient(n: int) -> Fraction:
    """
    Rationnel r tel que ζ(2n) = r·π^{2n}

    ζ(2n) = (-1)^{n+1} B_{2n} (2π)^{2n} / (2 (2n)!)
    """
    if n < 1:
        raise ValueError(f"n doit être >= 1 (reçu {n})")
    sign = 1 if n % 2 == 1 else -1
    return sign * bernoulli_number(2 * n) * 2 ** (2 * n) / (2 * factorial(2 * n))
