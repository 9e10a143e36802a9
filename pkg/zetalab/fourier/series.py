"""
Sommes partielles des séries de Fourier de B_m(α) et de ζ(s, α)

B_m(α) = -m! Σ_{|n|>=1} e^{2πinα} / (2πin)^m          (m >= 1)
ζ(s, α) = Γ(1-s) Σ_{|n|>=1} e^{2πinα} (2πin)^{s-1}    (Re s < 1)

Les termes n et -n sont additionnés par paires conjuguées.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from zetalab.errors import DomainViolation
from zetalab.numerics import gamma
from zetalab.utils.config import load_config
from zetalab.utils.validation import ComplexLike, to_complex, to_real

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi
I_POWERS = (1, 1j, -1, -1j)


@dataclass(frozen=True)
class FourierTruncation:
    """
    Troncature des sommes de Fourier : indices 1 <= |n| <= cutoff

    Attributes:
        cutoff: Entier N >= 1
    """
    cutoff: int

    def __post_init__(self):
        if isinstance(self.cutoff, bool) or not isinstance(self.cutoff, int) or self.cutoff < 1:
            raise ValueError(f"cutoff doit être un entier >= 1 (reçu {self.cutoff!r})")

    @classmethod
    def default(cls) -> "FourierTruncation":
        """Troncature Fourier par défaut (MZV_DEFAULT_CUTOFF si défini)"""
        return cls(load_config().fourier_cutoff)

    def indices(self) -> np.ndarray:
        return np.arange(1, self.cutoff + 1, dtype=float)


def _phases(n: np.ndarray, alpha: float) -> np.ndarray:
    # e^{2πinα} avec nα réduit modulo 1
    frac = np.mod(n * alpha, 1.0)
    return np.exp(1j * TWO_PI * frac)


def _paired_sum(positive: np.ndarray, negative: np.ndarray) -> complex:
    pairs = positive + negative
    return complex(math.fsum(pairs.real), math.fsum(pairs.imag))


def _fourier_sum_integer_power(power: int, alpha: float, trunc: FourierTruncation) -> complex:
    """Σ_{0<|n|<=N} e^{2πinα} / (2πin)^power"""
    n = trunc.indices()
    # (2πin)^{-p} = i^{-p} (2πn)^{-p} ; le terme en -n est le conjugué du terme en n
    positive = _phases(n, alpha) * I_POWERS[(-power) % 4] / (TWO_PI * n) ** power
    return _paired_sum(positive, np.conj(positive))


def bernoulli_fourier_partial(m: int, alpha: float,
                              trunc: Optional[FourierTruncation] = None) -> float:
    """
    Somme partielle -m! Σ_{0<|n|<=N} e^{2πinα}/(2πin)^m, qui tend vers B_m(α)

    Args:
        m: Entier >= 1
        alpha: Réel dans [0, 1] (]0, 1[ pour m = 1)
        trunc: Troncature (défaut : configuration)

    Returns:
        Partie réelle de la somme tronquée

    Raises:
        DomainViolation: m = 1 aux extrémités (la série y vaut 0, pas B_1)
    """
    alpha = to_real(alpha, "alpha")
    if m < 1:
        raise DomainViolation(f"m doit être >= 1 (reçu {m})")
    if not 0.0 <= alpha <= 1.0:
        raise DomainViolation(f"alpha doit être dans [0, 1] (reçu {alpha})")
    if m == 1 and alpha in (0.0, 1.0):
        raise DomainViolation("m = 1 : la série en dents de scie converge vers 0 aux extrémités")
    trunc = trunc or FourierTruncation.default()

    total = _fourier_sum_integer_power(m, alpha, trunc)
    return -math.factorial(m) * total.real


def hurwitz_neg_fourier_partial(m: int, alpha: float,
                                trunc: Optional[FourierTruncation] = None) -> float:
    """
    m! Σ_{0<|n|<=N} e^{2πinα}/(2πin)^{m+1}, qui tend vers ζ(-m, α)

    Identique à -B_{m+1}(α)/(m+1) terme à terme.
    """
    if m < 0:
        raise DomainViolation(f"m doit être >= 0 (reçu {m})")
    return -bernoulli_fourier_partial(m + 1, alpha, trunc) / (m + 1)


def hurwitz_fourier_partial(s: ComplexLike, alpha: float,
                            trunc: Optional[FourierTruncation] = None) -> complex:
    """
    Somme partielle de la formule de Hurwitz
    Γ(1-s) Σ_{0<|n|<=N} e^{2πinα} (2πin)^{s-1}

    (2πin)^{s-1} = exp((s-1)(ln(2π|n|) + iπ/2·sign(n))), branche principale.

    Raises:
        DomainViolation: Re s >= 1 ou α hors de ]0, 1[
    """
    s = to_complex(s, "s")
    alpha = to_real(alpha, "alpha")
    if s.real >= 1:
        raise DomainViolation(f"Re s doit être < 1 (reçu {s})")
    if not 0.0 < alpha < 1.0:
        raise DomainViolation(f"alpha doit être dans ]0, 1[ (reçu {alpha})")
    trunc = trunc or FourierTruncation.default()

    n = trunc.indices()
    phase = _phases(n, alpha)
    log_abs = np.log(TWO_PI * n)
    positive = phase * np.exp((s - 1) * (log_abs + 0.5j * math.pi))
    negative = np.conj(phase) * np.exp((s - 1) * (log_abs - 0.5j * math.pi))
    return gamma(1 - s) * _paired_sum(positive, negative)
