"""
Produits de polynômes de Bernoulli : série de Fourier et sommes de réseau

∏ B_{mᵢ+1}(α) = Σ_N a_N e^{2πiNα} avec
a_N = (-1)^r ∏(mᵢ+1)! Σ_{Σnᵢ = N, |nᵢ| >= 1} ∏ (2πi nᵢ)^{-(mᵢ+1)}

La somme sur Σnᵢ = 0 vaut ∫₀¹ ∏ B_{mᵢ+1}(α) dα (deux routes exactes
pour ce membre : somme sur les kᵢ et intégration du polynôme produit).
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from zetalab.bernoulli import bernoulli_number, bernoulli_poly
from zetalab.errors import ConvergenceUnsafe
from zetalab.exact import ONE, RationalPoly, binomial
from zetalab.utils.config import DEFAULT_CONFIG

from .series import I_POWERS, TWO_PI, FourierTruncation

logger = logging.getLogger(__name__)


def _check_m_list(m_list: Sequence[int]) -> Tuple[int, ...]:
    values = tuple(m_list)
    if not values:
        raise ValueError("m_list doit contenir au moins un entier")
    if any(m < 0 for m in values):
        raise ValueError(f"m_list : entiers >= 0 attendus (reçu {values})")
    return values


@dataclass(frozen=True)
class LatticeSum:
    """
    Somme Σ ∏ (2πi nᵢ)^{-eᵢ} sur 1 <= |nᵢ| <= cutoff, Σ nᵢ = target

    Attributes:
        exponents: (m₁+1, ..., m_r+1), entiers >= 1
        cutoff: Troncature N >= 1
        target: Valeur imposée de Σ nᵢ
    """
    exponents: Tuple[int, ...]
    cutoff: int
    target: int = 0

    def __post_init__(self):
        exponents = tuple(self.exponents)
        if not exponents or any(e < 1 for e in exponents):
            raise ValueError(f"Exposants >= 1 attendus (reçu {exponents})")
        if self.cutoff < 1:
            raise ValueError(f"cutoff doit être >= 1 (reçu {self.cutoff})")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def from_m_list(cls, m_list: Sequence[int], trunc: FourierTruncation, target: int = 0):
        return cls(tuple(m + 1 for m in _check_m_list(m_list)), trunc.cutoff, target)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def is_absolutely_convergent(self) -> bool:
        """
        r = 1 : somme finie. r = 2 : la contrainte laisse Σ|n|^{-(e₁+e₂)},
        e₁ + e₂ >= 2. r >= 3 : on exige Σ eᵢ >= r + 2.
        """
        if self.rank <= 2:
            return True
        return sum(self.exponents) >= self.rank + 2

    def evaluate(self) -> complex:
        """
        Somme tronquée, énumération déterministe par ordre croissant

        Les r - 2 premières coordonnées sont parcourues en Python, l'avant-
        dernière est vectorisée, la dernière est fixée par la contrainte
        (rejetée si nulle ou hors troncature).
        """
        if not self.is_absolutely_convergent():
            raise ConvergenceUnsafe(
                f"Exposants {self.exponents} : somme seulement conditionnellement convergente")

        N = self.cutoff
        total_power = sum(self.exponents)
        unit = I_POWERS[(-total_power) % 4] / TWO_PI ** total_power

        if self.rank == 1:
            n = self.target
            if n == 0 or abs(n) > N:
                return 0j
            return unit * float(n) ** (-self.exponents[0])

        axis = np.concatenate([np.arange(-N, 0), np.arange(1, N + 1)]).astype(float)
        *outer_exps, free_exp, last_exp = self.exponents
        values = []
        for outer in itertools.product(axis, repeat=len(outer_exps)):
            outer_factor = 1.0
            for n, e in zip(outer, outer_exps):
                outer_factor *= n ** (-e)
            last = self.target - sum(outer) - axis
            keep = (last != 0) & (np.abs(last) <= N)
            terms = outer_factor * axis[keep] ** (-free_exp) * last[keep] ** (-last_exp)
            values.append(math.fsum(terms))
        return unit * math.fsum(values)


def prop2_lhs(m_list: Sequence[int]) -> Fraction:
    """
    Σ_{k₁..k_r} ∏ B_{kᵢ} C(mᵢ+1, kᵢ) / (1 + Σ(mᵢ+1-kᵢ)), exact

    Égal à ∫₀¹ ∏ B_{mᵢ+1}(α) dα.
    """
    m_list = _check_m_list(m_list)
    total = Fraction(0)
    for ks in itertools.product(*(range(m + 2) for m in m_list)):
        numerator = Fraction(1)
        for m, k in zip(m_list, ks):
            numerator *= bernoulli_number(k) * binomial(m + 1, k)
            if numerator == 0:
                break
        if numerator:
            total += numerator / (1 + sum(m + 1 - k for m, k in zip(m_list, ks)))
    return total


def product_poly(m_list: Sequence[int]) -> RationalPoly:
    """∏ B_{mᵢ+1}(α)"""
    product = ONE
    for m in _check_m_list(m_list):
        product = product * bernoulli_poly(m + 1)
    return product


def prop2_lhs_via_poly(m_list: Sequence[int]) -> Fraction:
    """∫₀¹ ∏ B_{mᵢ+1}(α) dα par intégration du polynôme produit"""
    return product_poly(m_list).integrate_01()


def _prefactor(exponents: Sequence[int]) -> int:
    # (-1)^r ∏ (mᵢ+1)!
    sign = -1 if len(exponents) % 2 else 1
    return sign * math.prod(math.factorial(e) for e in exponents)


def product_fourier_coeff(m_list: Sequence[int], target: int,
                          trunc: Optional[FourierTruncation] = None) -> complex:
    """
    Coefficient a_target tronqué de la série de Fourier de ∏ B_{mᵢ+1}(α)

    Raises:
        ConvergenceUnsafe: somme non absolument convergente
    """
    trunc = trunc or FourierTruncation(DEFAULT_CONFIG.lattice_cutoff)
    lattice = LatticeSum.from_m_list(m_list, trunc, target)
    value = _prefactor(lattice.exponents) * lattice.evaluate()
    logger.debug(f"a_{target}{tuple(m_list)} (N={trunc.cutoff}) = {value}")
    return value


def prop2_rhs_truncated(m_list: Sequence[int], trunc: Optional[FourierTruncation] = None) -> float:
    """
    (-1)^r ∏(mᵢ+1)! Σ_{Σnᵢ=0} ∏(2πi nᵢ)^{-(mᵢ+1)}, tronqué

    Returns:
        Partie réelle (la partie imaginaire s'annule par symétrie n -> -n)
    """
    value = product_fourier_coeff(m_list, 0, trunc)
    if abs(value.imag) > 1e-10:
        logger.warning(f"Partie imaginaire inattendue {value.imag:.3e} pour {tuple(m_list)}")
    return value.real


def exact_product_fourier_coeff(m_list: Sequence[int], target: int) -> complex:
    """
    ∫₀¹ ∏ B_{mᵢ+1}(α) e^{-2πi·target·α} dα par intégrations par parties

    Pour target != 0 : Σ_{j>=0} (p^{(j)}(0) - p^{(j)}(1)) / (2πi·target)^{j+1}
    (la série s'arrête au degré de p ; chaque différence est exacte).
    """
    p = product_poly(m_list)
    if target == 0:
        return complex(float(p.integrate_01()))
    c = 1j * TWO_PI * target
    total = 0j
    derivative = p
    for j in range(p.degree + 1):
        jump = derivative(0) - derivative(1)
        if jump:
            total += float(jump) / c ** (j + 1)
        derivative = derivative.derivative()
    return total
