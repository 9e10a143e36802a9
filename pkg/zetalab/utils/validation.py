"""
Validation et conversion des arguments numériques
"""

import cmath
import re
from numbers import Number
from typing import List, Union

from zetalab.errors import DomainViolation

ComplexLike = Union[complex, float, int]

_COMPLEX_PATTERN = re.compile(
    r"^\s*(?P<re>[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)?"
    r"(?P<im>[+-](\d+(\.\d*)?|\.\d+)?([eE][+-]?\d+)?)?(?P<unit>[ij])?\s*$"
)


def to_complex(value: ComplexLike, name: str = "s") -> complex:
    """
    Convertir en complex en refusant NaN et infinis

    Raises:
        DomainViolation: composante non finie
    """
    if not isinstance(value, Number):
        raise TypeError(f"{name} doit être numérique, reçu {type(value).__name__}")
    z = complex(value)
    if not cmath.isfinite(z):
        raise DomainViolation(f"{name} doit être fini, reçu {z!r}")
    return z


def to_real(value: float, name: str = "alpha") -> float:
    """Convertir en float fini"""
    x = to_complex(value, name)
    if x.imag != 0.0:
        raise DomainViolation(f"{name} doit être réel, reçu {x!r}")
    return x.real


def is_integer_value(z: complex, tol: float = 0.0) -> bool:
    """Vrai si z est (à tol près) un entier réel"""
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def parse_complex(text: str) -> complex:
    """
    Lire un complexe au format "a", "a+bi", "a-bi", "bi"

    Example:
        >>> parse_complex("-0.5+2i")
        (-0.5+2j)
    """
    match = _COMPLEX_PATTERN.match(text)
    if not match or (match.group("re") is None and match.group("im") is None):
        raise ValueError(f"Complexe invalide : {text!r} (format attendu a+bi)")

    real_text, imag_text, unit = match.group("re"), match.group("im"), match.group("unit")
    if unit is None:
        if imag_text is not None:
            raise ValueError(f"Complexe invalide : {text!r} (suffixe i manquant)")
        return to_complex(float(real_text))

    if imag_text is None:
        # "2i" : la seule partie lue est imaginaire
        imag_text, real_text = real_text, None
    if imag_text in ("+", "-", None):
        imag_text = f"{imag_text or '+'}1"
    real = float(real_text) if real_text else 0.0
    return to_complex(complex(real, float(imag_text)))


def parse_int_list(text: str) -> List[int]:
    """Lire une liste d'entiers séparés par des virgules ("0,0,2")"""
    if text.strip() == "":
        return []
    try:
        values = [int(item) for item in text.split(",")]
    except ValueError:
        raise ValueError(f"Liste d'entiers invalide : {text!r}")
    return values
