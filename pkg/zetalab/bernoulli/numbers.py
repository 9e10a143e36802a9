"""
Nombres et polynômes de Bernoulli exacts

Convention B_1 = -1/2 (B_n = B_n(0)). Les nombres décalés B̄_n = B_n(1)
ne diffèrent de B_n qu'en n = 1 : B̄_1 = B_1 + 1 = 1/2.
"""

import logging
import threading
from fractions import Fraction
from functools import lru_cache
from typing import List

from zetalab.exact import RationalPoly, binomial

logger = logging.getLogger(__name__)


class BernoulliTable:
    """
    Table mémoïsée des nombres de Bernoulli

    L'entrée n vaut B_n ; la table s'étend à la demande par la récurrence
    Σ_{k=0}^{n} C(n+1, k) B_k = 0. L'extension est protégée par un verrou,
    les valeurs renvoyées sont immuables.

    Example:
        >>> table = BernoulliTable()
        >>> table[12]
        Fraction(-691, 2730)
    """

    def __init__(self):
        self._values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Indice de Bernoulli négatif : {n}")
        if n >= len(self._values):
            self._extend(n)
        return self._values[n]

    def _extend(self, n: int):
        with self._lock:
            start = len(self._values)
            for index in range(start, n + 1):
                if index >= 3 and index % 2 == 1:
                    self._values.append(Fraction(0))
                    continue
                total = sum((binomial(index + 1, k) * self._values[k] for k in range(index)),
                            Fraction(0))
                self._values.append(-total / (index + 1))
            if n >= start:
                logger.debug(f"Table de Bernoulli étendue de {start} à {n + 1} entrées")

    def values(self, n: int) -> List[Fraction]:
        """Liste [B_0, ..., B_n]"""
        self[n]
        return list(self._values[:n + 1])


_TABLE = BernoulliTable()


def bernoulli_number(n: int) -> Fraction:
    """
    Nombre de Bernoulli B_n (convention B_1 = -1/2)

    Args:
        n: Indice >= 0

    Returns:
        B_n exact
    """
    return _TABLE[n]


def bernoulli_numbers(n: int) -> List[Fraction]:
    """[B_0, B_1, ..., B_n]"""
    return _TABLE.values(n)


def bernoulli_bar(n: int) -> Fraction:
    """B̄_n = B_n(1) : B_n pour n != 1, et 1/2 pour n = 1"""
    if n == 1:
        return bernoulli_number(1) + 1
    return bernoulli_number(n)


@lru_cache(maxsize=None)
def bernoulli_poly(m: int) -> RationalPoly:
    """
    Polynôme de Bernoulli B_m(α) = Σ_{k=0}^{m} C(m, k) B_k α^{m-k}

    Returns:
        Polynôme unitaire de degré m
    """
    if m < 0:
        raise ValueError(f"Degré négatif : {m}")
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = binomial(m, k) * bernoulli_number(k)
    return RationalPoly(tuple(coeffs))


@lru_cache(maxsize=None)
def bernoulli_bar_poly(m: int) -> RationalPoly:
    """
    B̄_m(α) = Σ_{k=0}^{m} C(m, k) B̄_k α^{m-k}, égal à B_m(α + 1)
    """
    if m < 0:
        raise ValueError(f"Degré négatif : {m}")
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = binomial(m, k) * bernoulli_bar(k)
    return RationalPoly(tuple(coeffs))
