"""
Polynômes univariés à coefficients rationnels exacts

Représentation dense : coefficients par puissances croissantes de α,
zéros de tête supprimés (le polynôme nul a une liste vide).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .rational import RationalLike, binomial, format_rational, parse_rational, to_rational


def _normalize(coeffs: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    terms = [to_rational(c) for c in coeffs]
    while terms and terms[-1] == 0:
        terms.pop()
    return tuple(terms)


@dataclass(frozen=True)
class RationalPoly:
    """
    Polynôme exact en α

    Attributes:
        coeffs: Coefficients rationnels, coeffs[j] multiplie α^j

    Example:
        >>> p = RationalPoly.from_coeffs([Fraction(1, 6), -1, 1])
        >>> str(p)
        'a^2 - a + 1/6'
        >>> p(Fraction(1, 4))
        Fraction(-1, 48)
    """
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike]) -> "RationalPoly":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: RationalLike) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: RationalLike = 1) -> "RationalPoly":
        if power < 0:
            raise ValueError(f"Puissance négative : {power}")
        return cls((0,) * power + (c,))

    @property
    def degree(self) -> int:
        """Degré (−1 pour le polynôme nul)"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            other = RationalPoly.constant(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(tuple(self.coefficient(j) + other.coefficient(j) for j in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            other = RationalPoly.constant(other)
        return self + (-other)

    def __mul__(self, other) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            scalar = to_rational(other)
            return RationalPoly(tuple(c * scalar for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return RationalPoly(tuple(product))

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> "RationalPoly":
        scalar = to_rational(scalar)
        if scalar == 0:
            raise ZeroDivisionError("Division d'un polynôme par zéro")
        return RationalPoly(tuple(c / scalar for c in self.coeffs))

    def __call__(self, x: RationalLike) -> Fraction:
        """Évaluation exacte par Horner"""
        x = to_rational(x)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(j * c for j, c in enumerate(self.coeffs) if j > 0))

    def antiderivative(self) -> "RationalPoly":
        """Primitive de terme constant nul"""
        return RationalPoly((0,) + tuple(c / (j + 1) for j, c in enumerate(self.coeffs)))

    def integrate_01(self) -> Fraction:
        """∫₀¹ p(α) dα = Σ c_j / (j + 1)"""
        return sum((c / (j + 1) for j, c in enumerate(self.coeffs)), Fraction(0))

    def shift_by(self, h: RationalLike) -> "RationalPoly":
        """p(α + h) par développement binomial de chaque monôme"""
        h = to_rational(h)
        shifted = [Fraction(0)] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            # c (α + h)^j = Σ_i C(j, i) h^(j-i) α^i
            for i in range(j + 1):
                shifted[i] += c * binomial(j, i) * h ** (j - i)
        return RationalPoly(tuple(shifted))

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RationalPoly":
        return cls(tuple(parse_rational(item) for item in data))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = format_rational(magnitude)
            else:
                var = "a" if power == 1 else f"a^{power}"
                body = var if magnitude == 1 else f"{format_rational(magnitude)}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# Fonctions au niveau module (API procédurale)

def poly_add(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    return p + q


def poly_sub(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    return p - q


def poly_neg(p: RationalPoly) -> RationalPoly:
    return -p


def poly_scale(p: RationalPoly, c: RationalLike) -> RationalPoly:
    return p * to_rational(c)


def poly_mul(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    """Convolution exacte des listes de coefficients"""
    return p * q


def poly_eval(p: RationalPoly, x: RationalLike) -> Fraction:
    return p(x)


def poly_integrate_01(p: RationalPoly) -> Fraction:
    return p.integrate_01()


def poly_derivative(p: RationalPoly) -> RationalPoly:
    return p.derivative()


def poly_antiderivative(p: RationalPoly) -> RationalPoly:
    return p.antiderivative()


def poly_shift(p: RationalPoly) -> RationalPoly:
    """p(α + 1)"""
    return p.shift_by(1)


def poly_shift_by(p: RationalPoly, h: RationalLike) -> RationalPoly:
    return p.shift_by(h)


def poly_shift_inverse(p: RationalPoly) -> RationalPoly:
    """p(α − 1), inverse de poly_shift"""
    return p.shift_by(-1)


ALPHA = RationalPoly.monomial(1)
ONE = RationalPoly.constant(1)
ZERO = RationalPoly()
