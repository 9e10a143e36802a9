"""
Vérification par la série génératrice z e^{αz} / (e^z - 1)

Calcul dans l'anneau des séries formelles tronquées dont les coefficients
sont des polynômes en α ; indépendant de la récurrence des B_n.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import List, Sequence

from zetalab.exact import RationalPoly, ONE
from zetalab.utils.config import DEFAULT_CONFIG

from .numbers import bernoulli_poly

logger = logging.getLogger(__name__)

Series = List[RationalPoly]


def series_mul(a: Sequence[RationalPoly], b: Sequence[RationalPoly], order: int) -> Series:
    """Produit de Cauchy tronqué à l'ordre `order` (inclus)"""
    result = [RationalPoly() for _ in range(order + 1)]
    for i in range(min(order, len(a) - 1) + 1):
        if a[i].is_zero():
            continue
        for j in range(min(order - i, len(b) - 1) + 1):
            result[i + j] = result[i + j] + a[i] * b[j]
    return result


def series_inverse(a: Sequence[Fraction], order: int) -> List[Fraction]:
    """Inverse d'une série à coefficients rationnels (a[0] != 0)"""
    if a[0] == 0:
        raise ZeroDivisionError("Série non inversible (terme constant nul)")
    inverse = [Fraction(1) / a[0]]
    for n in range(1, order + 1):
        acc = sum((a[k] * inverse[n - k] for k in range(1, min(n, len(a) - 1) + 1)), Fraction(0))
        inverse.append(-acc / a[0])
    return inverse


def generating_function_series(order: int = DEFAULT_CONFIG.series_order) -> Series:
    """
    Coefficients de z e^{αz} / (e^z - 1) jusqu'à z^order

    z / (e^z - 1) est l'inverse de (e^z - 1)/z = Σ z^n/(n+1)!, multiplié
    ensuite par e^{αz} = Σ α^n z^n / n!.
    """
    quotient = [Fraction(1, factorial(n + 1)) for n in range(order + 1)]
    inverse = [ONE * c for c in series_inverse(quotient, order)]
    exp_alpha = [RationalPoly.monomial(n, Fraction(1, factorial(n))) for n in range(order + 1)]
    return series_mul(inverse, exp_alpha, order)


def check_generating_function(order: int = DEFAULT_CONFIG.series_order) -> List[int]:
    """
    Comparer la série génératrice à Σ B_n(α) z^n / n!

    Returns:
        Liste des ordres n en désaccord (vide si tout concorde)
    """
    series = generating_function_series(order)
    mismatches = [n for n in range(order + 1)
                  if series[n] != bernoulli_poly(n) / factorial(n)]
    if mismatches:
        logger.warning(f"Série génératrice : désaccord aux ordres {mismatches}")
    return mismatches
