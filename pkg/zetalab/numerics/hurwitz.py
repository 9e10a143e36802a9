"""
Zêta de Hurwitz par sommation d'Euler-Maclaurin

ζ(s, α) ≈ Σ_{n<N} (n+α)^{-s} + a^{1-s}/(s-1) + a^{-s}/2
          + Σ_{j=1}^{J} B_{2j}/(2j)! · s(s+1)...(s+2j-2) · a^{-s-2j+1},  a = N + α

Pour Re s <= -2.5 (α <= 16), la somme directe compense des termes en
(N+α)^{1-s} : on passe alors par la formule de Hurwitz, absolument
convergente. Les entiers s = -m restent traités en rationnels exacts.

Sert d'oracle numérique indépendant pour les identités exactes.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from zetalab.bernoulli import bernoulli_number
from zetalab.errors import DomainViolation, PoleHit
from zetalab.utils.config import DEFAULT_CONFIG
from zetalab.utils.validation import ComplexLike, is_integer_value, to_complex, to_real

from .gamma import gamma

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EulerMaclaurinParams:
    """
    Paramètres d'Euler-Maclaurin

    Attributes:
        head_terms: Longueur N de la somme directe (N >= 8)
        correction_order: Nombre J de corrections B_2j (1 <= J <= 20)
    """
    head_terms: int = DEFAULT_CONFIG.em_head_min
    correction_order: int = DEFAULT_CONFIG.em_corrections

    def __post_init__(self):
        if self.head_terms < 8:
            raise ValueError(f"head_terms doit être >= 8 (reçu {self.head_terms})")
        if not 1 <= self.correction_order <= 20:
            raise ValueError(f"correction_order doit être dans [1, 20] (reçu {self.correction_order})")

    @classmethod
    def for_argument(cls, s: ComplexLike) -> "EulerMaclaurinParams":
        """N = max(16, ⌈|Im s|⌉ + 16), J = 12"""
        s = to_complex(s)
        head = max(DEFAULT_CONFIG.em_head_min, math.ceil(abs(s.imag)) + 16)
        return cls(head_terms=head, correction_order=DEFAULT_CONFIG.em_corrections)


def _corrections_float(J: int):
    return [float(bernoulli_number(2 * j) / math.factorial(2 * j)) for j in range(1, J + 1)]


def _hurwitz_exact_negint(m: int, alpha: float, params: EulerMaclaurinParams) -> float:
    """
    Même formule en arithmétique exacte pour s = -m (m <= 2J - 2)

    La série de corrections s'annule au-delà de 2j - 2 >= m : le résultat
    est exact pour la valeur binaire de α, seul l'arrondi final subsiste.
    """
    a0 = Fraction(alpha)
    N = params.head_terms
    head = sum(((n + a0) ** m for n in range(N)), Fraction(0))
    a = N + a0
    tail = -a ** (m + 1) / (m + 1) + a ** m / 2
    for j in range(1, params.correction_order + 1):
        rising = Fraction(1)
        for i in range(2 * j - 1):
            rising *= i - m
        if rising == 0:
            break
        tail += bernoulli_number(2 * j) / math.factorial(2 * j) * rising * a ** (m - 2 * j + 1)
    return float(head + tail)


def _hurwitz_float(s: complex, alpha: float, params: EulerMaclaurinParams) -> complex:
    N, J = params.head_terms, params.correction_order
    bases = np.arange(N, dtype=float) + alpha
    head_terms = np.exp(-s * np.log(bases))

    a = N + alpha
    log_a = math.log(a)
    tail = [np.exp((1 - s) * log_a) / (s - 1), 0.5 * np.exp(-s * log_a)]
    rising = s
    for j, coeff in enumerate(_corrections_float(J), start=1):
        if j > 1:
            rising *= (s + 2 * j - 3) * (s + 2 * j - 2)
        tail.append(coeff * rising * np.exp((-s - 2 * j + 1) * log_a))

    parts = np.concatenate([head_terms, np.asarray(tail, dtype=complex)])
    return complex(math.fsum(parts.real), math.fsum(parts.imag))


def _hurwitz_fourier(s: complex, alpha: float) -> complex:
    """
    Formule de Hurwitz pour Re s < 0 :
    ζ(s, β) = Γ(1-s) Σ_{n>=1} (2πn)^{s-1} (e^{iπ(s-1)/2} e^{2πinβ} + e^{-iπ(s-1)/2} e^{-2πinβ})
    avec β = α - k dans ]0, 1], puis ζ(s, α) = ζ(s, β) - Σ_{j<k} (β+j)^{-s}

    Les termes décroissent en n^{Re s - 1} sans compensation entre grandes
    valeurs, contrairement à la somme directe d'Euler-Maclaurin.
    """
    sigma = s.real
    shift = max(0, math.ceil(alpha) - 1)
    base = alpha - shift

    prefactor = gamma(1 - s)
    rotation = cmath.exp(0.5j * math.pi * (s - 1))
    # Majorant de la série : |reste après M termes| <= scale * M^σ / |σ|
    scale = 2 * abs(prefactor) * math.exp(0.5 * math.pi * abs(s.imag)) * (2 * math.pi) ** (sigma - 1)
    target = DEFAULT_CONFIG.fourier_branch_tolerance * max(1.0, scale)
    terms_needed = math.ceil((target * abs(sigma) / scale) ** (1 / sigma))
    M = min(max(terms_needed, 1), DEFAULT_CONFIG.fourier_branch_max_terms)
    if M < terms_needed:
        logger.warning(f"Série de Hurwitz tronquée à {M} termes pour s = {s}")

    n = np.arange(1, M + 1, dtype=float)
    powers = np.exp((s - 1) * np.log(2 * math.pi * n))
    phase = np.exp(2j * math.pi * np.mod(n * base, 1.0))
    terms = powers * (rotation * phase + np.conj(phase) / rotation)
    total = prefactor * complex(math.fsum(terms.real), math.fsum(terms.imag))

    if shift:
        head = np.exp(-s * np.log(base + np.arange(shift, dtype=float)))
        total -= complex(math.fsum(head.real), math.fsum(head.imag))
    return total


def hurwitz_zeta_num(s: ComplexLike, alpha: float,
                     params: Optional[EulerMaclaurinParams] = None) -> complex:
    """
    ζ(s, α) prolongée analytiquement

    Args:
        s: Complexe différent de 1
        alpha: Réel > 0
        params: Paramètres Euler-Maclaurin (règle par défaut si None)

    Returns:
        Valeur complexe

    Raises:
        PoleHit: s = 1
        DomainViolation: α <= 0

    Example:
        >>> abs(hurwitz_zeta_num(2, 1) - math.pi ** 2 / 6) < 1e-10
        True
    """
    s = to_complex(s, "s")
    alpha = to_real(alpha, "alpha")
    if alpha <= 0:
        raise DomainViolation(f"alpha doit être > 0 (reçu {alpha})")
    if abs(s - 1) < DEFAULT_CONFIG.pole_tolerance:
        raise PoleHit("zeta(s, alpha) a un pôle en s = 1")
    params = params or EulerMaclaurinParams.for_argument(s)

    if s.real <= 0 and is_integer_value(s):
        m = int(round(-s.real))
        if m <= 2 * params.correction_order - 2:
            return complex(_hurwitz_exact_negint(m, alpha, params))
        logger.debug(f"s = -{m} au-delà des corrections exactes, évaluation flottante")
    if s.real <= DEFAULT_CONFIG.fourier_branch_max_real and alpha <= DEFAULT_CONFIG.fourier_branch_max_alpha:
        return _hurwitz_fourier(s, alpha)
    return _hurwitz_float(s, alpha, params)


def riemann_zeta_num(s: ComplexLike, params: Optional[EulerMaclaurinParams] = None) -> complex:
    """ζ(s) = ζ(s, 1)"""
    return hurwitz_zeta_num(s, 1.0, params)


def hurwitz_shift_defect(s: ComplexLike, alpha: float,
                         params: Optional[EulerMaclaurinParams] = None) -> complex:
    """Résidu ζ(s, α) - ζ(s, α+1) - α^{-s} (nul en théorie)"""
    s = to_complex(s, "s")
    alpha = to_real(alpha, "alpha")
    left = hurwitz_zeta_num(s, alpha, params) - hurwitz_zeta_num(s, alpha + 1, params)
    return complex(left - np.exp(-s * math.log(alpha)))


def bernoulli_function(s: ComplexLike, alpha: float,
                       params: Optional[EulerMaclaurinParams] = None) -> complex:
    """
    Fonction de Bernoulli généralisée B(s, α) = s ζ(s+1, α)

    Fonction entière de s : B(-m, α) = B_m(α) et B(0, α) = 1 (limite,
    renvoyée directement).
    """
    s = to_complex(s, "s")
    alpha = to_real(alpha, "alpha")
    if alpha <= 0:
        raise DomainViolation(f"alpha doit être > 0 (reçu {alpha})")
    if s == 0:
        return complex(1.0)
    return s * hurwitz_zeta_num(s + 1, alpha, params)
