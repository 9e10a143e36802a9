"""
Fonction gamma complexe (approximation de Lanczos, g = 7, 9 termes)

Réflexion Γ(z)Γ(1-z) = π / sin(πz) pour Re z < 1/2.
"""

import cmath
import math

from zetalab.errors import PoleHit
from zetalab.utils.config import DEFAULT_CONFIG
from zetalab.utils.validation import ComplexLike, to_complex

LANCZOS_G = 7
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_TWO_PI = math.sqrt(2 * math.pi)


def _lanczos(z: complex) -> complex:
    # Γ(z) pour Re z >= 1/2
    z -= 1
    acc = LANCZOS_COEFFS[0]
    for i, coeff in enumerate(LANCZOS_COEFFS[1:], start=1):
        acc += coeff / (z + i)
    t = z + LANCZOS_G + 0.5
    return _SQRT_TWO_PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc


def gamma(z: ComplexLike) -> complex:
    """
    Γ(z) pour z complexe

    Args:
        z: Complexe hors des entiers négatifs ou nuls

    Returns:
        Γ(z) (erreur relative ~1e-13 sur les arguments usuels)

    Raises:
        PoleHit: z entier <= 0 (à 1e-12 près)

    Example:
        >>> abs(gamma(5) - 24) < 1e-10
        True
    """
    z = to_complex(z, "z")
    tol = DEFAULT_CONFIG.pole_tolerance
    if z.real <= tol and abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol:
        raise PoleHit(f"Gamma a un pôle en z = {z.real:g}")

    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * _lanczos(1 - z))
    return _lanczos(z)
