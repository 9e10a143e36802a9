"""
Arithmétique rationnelle exacte

Les rationnels sont des fractions.Fraction : numérateur et dénominateur
entiers de précision arbitraire, forme canonique (dénominateur > 0,
fraction réduite) après chaque opération.
"""

from fractions import Fraction
from typing import Union

BigRational = Fraction
RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    Convertir un entier, une chaîne "p/q" ou une Fraction en BigRational

    Les flottants sont refusés : un rationnel exact ne se déduit pas d'un
    arrondi binaire sans ambiguïté.
    """
    if isinstance(value, bool):
        raise TypeError("Un booléen n'est pas un rationnel")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Type non supporté pour un rationnel : {type(value).__name__}")


def binomial(n: int, k: int) -> int:
    """
    Coefficient binomial C(n, k) par la formule multiplicative

    Chaque division intermédiaire est exacte : après l'étape i,
    result vaut C(n - k + i, i).

    Args:
        n: Entier >= 0
        k: Entier >= 0

    Returns:
        C(n, k), et 0 si k > n
    """
    if n < 0 or k < 0:
        raise ValueError(f"binomial attend n, k >= 0 (reçu n={n}, k={k})")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def format_rational(x: RationalLike) -> str:
    """
    Sérialiser au format "p/q" (q omis quand q = 1)

    Example:
        >>> format_rational(Fraction(-1, 12))
        '-1/12'
    """
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Lire un rationnel au format "p/q" ou "p"

    Raises:
        ValueError: texte mal formé (décimales, dénominateur nul, ...)
    """
    parts = text.strip().split("/")
    if len(parts) > 2:
        raise ValueError(f"Rationnel invalide : {text!r}")
    try:
        numerator = int(parts[0])
        denominator = int(parts[1]) if len(parts) == 2 else 1
    except ValueError:
        raise ValueError(f"Rationnel invalide : {text!r}")
    if denominator == 0:
        raise ValueError(f"Dénominateur nul : {text!r}")
    return Fraction(numerator, denominator)
