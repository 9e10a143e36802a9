"""
Identité de Parseval pour ∫₀¹ ζ(s₁, α) ζ(s₂, α) dα

Forme close (Re(s₁ + s₂) < 1) :
    2 (2π)^{s₁+s₂-2} cos(π(s₁-s₂)/2) Γ(1-s₁) Γ(1-s₂) ζ(2 - s₁ - s₂)
"""

import cmath
import logging
import math
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from zetalab.bernoulli import bernoulli_poly
from zetalab.errors import DomainViolation
from zetalab.exact import poly_integrate_01, poly_mul
from zetalab.numerics import EulerMaclaurinParams, gamma, hurwitz_zeta_num, riemann_zeta_num
from zetalab.utils.config import DEFAULT_CONFIG
from zetalab.utils.validation import ComplexLike, to_complex
from zetalab.zetasym import zeta_even_pi_coefficient

logger = logging.getLogger(__name__)


def parseval_rhs(s1: ComplexLike, s2: ComplexLike,
                 params: Optional[EulerMaclaurinParams] = None) -> complex:
    """
    Membre de droite (forme close) de l'identité de Parseval

    Raises:
        DomainViolation: Re(s₁ + s₂) >= 1
    """
    s1, s2 = to_complex(s1, "s1"), to_complex(s2, "s2")
    if (s1 + s2).real >= 1:
        raise DomainViolation(f"Re(s1 + s2) doit être < 1 (reçu {s1 + s2})")
    prefactor = 2 * cmath.exp((s1 + s2 - 2) * math.log(2 * math.pi))
    cosine = cmath.cos(math.pi / 2 * (s1 - s2))
    return prefactor * cosine * gamma(1 - s1) * gamma(1 - s2) * riemann_zeta_num(2 - s1 - s2, params)


def _origin_panel(s1: complex, s2: complex, eps: float,
                  params1: EulerMaclaurinParams, params2: EulerMaclaurinParams) -> complex:
    """
    ∫₀^ε ζ(s₁, α) ζ(s₂, α) dα avec ζ(s, α) ≈ α^{-s} + ζ(s, 1) près de 0

    (décalage ζ(s, α) = α^{-s} + ζ(s, α + 1))
    """
    c1 = hurwitz_zeta_num(s1, 1.0, params1)
    c2 = hurwitz_zeta_num(s2, 1.0, params2)
    log_eps = math.log(eps)

    def power_integral(t: complex) -> complex:
        # ∫₀^ε α^{-t} dα
        return cmath.exp((1 - t) * log_eps) / (1 - t)

    return (power_integral(s1 + s2) + c2 * power_integral(s1)
            + c1 * power_integral(s2) + c1 * c2 * eps)


def parseval_lhs_num(s1: ComplexLike, s2: ComplexLike,
                     params: Optional[EulerMaclaurinParams] = None,
                     panels: int = DEFAULT_CONFIG.quadrature_panels,
                     order: int = DEFAULT_CONFIG.quadrature_order) -> complex:
    """
    Quadrature de ∫₀¹ ζ(s₁, α) ζ(s₂, α) dα

    Panneaux de Gauss-Legendre d'ordre fixe sur [2^{-i-1}, 2^{-i}],
    i = 0..panels-1 ; le reste [0, 2^{-panels}] est intégré avec le
    comportement α^{-s} de la singularité en 0.

    Raises:
        DomainViolation: Re s₁ >= 1, Re s₂ >= 1 ou Re(s₁ + s₂) >= 1
    """
    s1, s2 = to_complex(s1, "s1"), to_complex(s2, "s2")
    if s1.real >= 1 or s2.real >= 1 or (s1 + s2).real >= 1:
        raise DomainViolation(f"Hypothèses Re s1, Re s2, Re(s1+s2) < 1 violées ({s1}, {s2})")
    if panels < 1 or order < 1:
        raise ValueError(f"panels et order doivent être >= 1 (reçu {panels}, {order})")
    params1 = params or EulerMaclaurinParams.for_argument(s1)
    params2 = params or EulerMaclaurinParams.for_argument(s2)

    nodes, weights = np.polynomial.legendre.leggauss(order)
    contributions = []
    for i in range(panels):
        lo, hi = 2.0 ** (-i - 1), 2.0 ** (-i)
        half = (hi - lo) / 2
        for x, w in zip(lo + half * (nodes + 1), half * weights):
            contributions.append(w * hurwitz_zeta_num(s1, x, params1) * hurwitz_zeta_num(s2, x, params2))
    contributions.append(_origin_panel(s1, s2, 2.0 ** (-panels), params1, params2))

    values = np.asarray(contributions, dtype=complex)
    logger.debug(f"Quadrature Parseval : {panels} panneaux x {order} noeuds")
    return complex(math.fsum(values.real), math.fsum(values.imag))


def parseval_exact_negint(a: int, b: int) -> Tuple[Fraction, Fraction]:
    """
    Identité de Parseval en s₁ = -a, s₂ = -b, dans ℚ

    LHS = ∫₀¹ B_{a+1} B_{b+1} dα / ((a+1)(b+1)).
    RHS = 0 si a + b est impair (cosinus nul) ; sinon, avec 2n = a + b + 2 et
    ζ(2n) = r·π^{2n}, les puissances de π se simplifient :
    RHS = 2 (-1)^{(b-a)/2} a! b! r / 4^n

    Returns:
        (LHS, RHS) ; l'identité affirme LHS = RHS

    Example:
        >>> parseval_exact_negint(1, 1)
        (Fraction(1, 720), Fraction(1, 720))
    """
    if a < 0 or b < 0:
        raise ValueError(f"a, b doivent être >= 0 (reçu {a}, {b})")
    product = poly_mul(bernoulli_poly(a + 1), bernoulli_poly(b + 1))
    lhs = poly_integrate_01(product) / ((a + 1) * (b + 1))

    if (a + b) % 2 == 1:
        return lhs, Fraction(0)
    n = (a + b + 2) // 2
    sign = -1 if ((b - a) // 2) % 2 else 1
    rhs = 2 * sign * math.factorial(a) * math.factorial(b) * zeta_even_pi_coefficient(n) / 4 ** n
    return lhs, rhs
