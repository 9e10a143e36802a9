"""
Réduction de ζ_k(s₁, -m₂, ..., -m_k) en combinaison de valeurs ζ(s₁ - e)

La récurrence descend niveau par niveau (j = k, k-1, ..., 2) : chaque
monôme c·n^e du polynôme P_j devient c·ζ(-m_{j-1} - e, n + 1), polynôme
en n au niveau suivant. Au niveau 2, c·n^e donne le terme c·ζ(s₁ - e).

Example:
    >>> comb = mzv_reduce(MZVSpec((0, 0)))
    >>> str(comb)
    '1/2*zeta(s1-2) + zeta(s1-1) + 1/3*zeta(s1)'
    >>> mzv_eval_exact(MZVSpec((0, 0)), 0)
    Fraction(-1, 4)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from zetalab.bernoulli import bernoulli_bar
from zetalab.errors import DomainViolation, PoleHit
from zetalab.exact import RationalPoly, binomial, format_rational, parse_rational
from zetalab.numerics import riemann_zeta_num
from zetalab.utils.config import DEFAULT_CONFIG
from zetalab.utils.validation import ComplexLike, is_integer_value, parse_int_list, to_complex

from .hurwitz import hurwitz_neg_poly_shifted, zeta_neg

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MZVSpec:
    """
    Arguments fixés (m₂, ..., m_k) de ζ_k ; s₁ est fourni à l'évaluation

    Attributes:
        trailing_args: Entiers >= 0 ; tuple vide pour k = 1
    """
    trailing_args: Tuple[int, ...] = ()

    def __post_init__(self):
        args = tuple(self.trailing_args)
        for m in args:
            if isinstance(m, bool) or not isinstance(m, int) or m < 0:
                raise ValueError(f"Arguments de MZVSpec : entiers >= 0 attendus, reçu {args}")
        object.__setattr__(self, "trailing_args", args)

    @property
    def k(self) -> int:
        return len(self.trailing_args) + 1

    @classmethod
    def parse(cls, text: str) -> "MZVSpec":
        """MZVSpec.parse("0,2") -> MZVSpec((0, 2))"""
        return cls(tuple(parse_int_list(text)))

    def __str__(self) -> str:
        trailing = "".join(f", -{m}" for m in self.trailing_args)
        return f"zeta_{self.k}(s1{trailing})"


@dataclass(frozen=True)
class ZetaCombination:
    """
    Combinaison finie Σ_e c_e ζ(s₁ - e)

    Attributes:
        terms: Couples (décalage e, coefficient c_e), décalages distincts,
            coefficients non nuls, triés par décalage décroissant
    """
    terms: Tuple[Tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        merged: Dict[int, Fraction] = {}
        for shift, coeff in self.terms:
            if shift < 0:
                raise ValueError(f"Décalage négatif : {shift}")
            merged[shift] = merged.get(shift, Fraction(0)) + Fraction(coeff)
        canonical = tuple((e, c) for e, c in sorted(merged.items(), reverse=True) if c != 0)
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def from_dict(cls, mapping: Mapping[int, Fraction]) -> "ZetaCombination":
        return cls(tuple(mapping.items()))

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    @property
    def shifts(self) -> List[int]:
        return [e for e, _ in self.terms]

    def coefficient(self, shift: int) -> Fraction:
        return self.as_dict().get(shift, Fraction(0))

    def to_json(self) -> dict:
        return {"terms": [{"shift": e, "coeff": format_rational(c)} for e, c in self.terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ZetaCombination":
        return cls(tuple((int(t["shift"]), parse_rational(t["coeff"])) for t in data["terms"]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms:
            arg = "s1" if e == 0 else f"s1-{e}"
            magnitude = abs(c)
            body = f"zeta({arg})" if magnitude == 1 else f"{format_rational(magnitude)}*zeta({arg})"
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def _as_spec(spec) -> MZVSpec:
    return spec if isinstance(spec, MZVSpec) else MZVSpec(tuple(spec))


def mzv_level_polys(spec: MZVSpec) -> List[RationalPoly]:
    """
    Polynômes intermédiaires [P_k, ..., P_2] de la récurrence

    P_j(n) est la valeur (prolongée) de la somme sur les niveaux j..k,
    vue comme polynôme en n = n_{j-1}.
    """
    spec = _as_spec(spec)
    args = spec.trailing_args
    if not args:
        return []

    current = hurwitz_neg_poly_shifted(args[-1])
    levels = [current]
    for m_prev in reversed(args[:-1]):
        nxt = RationalPoly()
        for e, c in enumerate(current.coeffs):
            if c != 0:
                nxt = nxt + hurwitz_neg_poly_shifted(m_prev + e) * c
        current = nxt
        levels.append(current)
    return levels


def mzv_reduce(spec: MZVSpec) -> ZetaCombination:
    """
    ζ_k(s₁, -m₂, ..., -m_k) = Σ_e c_e ζ(s₁ - e)

    Args:
        spec: (m₂, ..., m_k) ; la spécification vide donne ζ lui-même

    Returns:
        ZetaCombination exacte
    """
    spec = _as_spec(spec)
    levels = mzv_level_polys(spec)
    if not levels:
        return ZetaCombination(((0, Fraction(1)),))
    final = levels[-1]
    logger.debug(f"{spec} : P_2 de degré {final.degree}")
    return ZetaCombination(tuple(enumerate(final.coeffs)))


def mzv_theorem_k3(m2: int, m3: int) -> ZetaCombination:
    """
    Formule explicite k = 3 : double somme sur k₃ ∈ [0, m₃+1] et
    k₂ ∈ [0, m₂+m₃+2-k₃] de
    C(m₃+1, k₃) B̄_{k₃}/(m₃+1) · C(M, k₂) B̄_{k₂}/M, avec M = m₂+m₃+2-k₃,
    attachée au décalage M - k₂.
    """
    if m2 < 0 or m3 < 0:
        raise ValueError(f"m2, m3 doivent être >= 0 (reçu {m2}, {m3})")
    terms: Dict[int, Fraction] = {}
    for k3 in range(m3 + 2):
        outer = binomial(m3 + 1, k3) * bernoulli_bar(k3) / (m3 + 1)
        if outer == 0:
            continue
        M = m2 + m3 + 2 - k3
        for k2 in range(M + 1):
            inner = binomial(M, k2) * bernoulli_bar(k2) / M
            terms[M - k2] = terms.get(M - k2, Fraction(0)) + outer * inner
    return ZetaCombination.from_dict(terms)


def _nested_terms(args: Sequence[int], carry: int) -> Iterator[Tuple[int, Fraction]]:
    """
    Développe récursivement les niveaux restants

    `carry` est l'exposant de n hérité du niveau supérieur ; le niveau
    courant a pour degré D = m + carry + 1.
    """
    m = args[-1]
    D = m + carry + 1
    for k in range(D + 1):
        coeff = -binomial(D, k) * bernoulli_bar(k) / D
        if coeff == 0:
            continue
        if len(args) == 1:
            yield D - k, coeff
        else:
            for shift, inner in _nested_terms(args[:-1], D - k):
                yield shift, coeff * inner


def mzv_theorem_general(spec: MZVSpec) -> ZetaCombination:
    """
    Somme multi-indices explicite généralisant la formule k = 3 à tout k

    Chaque niveau j contribue -C(D_j, k_j) B̄_{k_j} / D_j avec
    D_k = m_k + 1 et D_{j} = m_j + (D_{j+1} - k_{j+1}) + 1.
    """
    spec = _as_spec(spec)
    if not spec.trailing_args:
        return ZetaCombination(((0, Fraction(1)),))
    terms: Dict[int, Fraction] = {}
    for shift, coeff in _nested_terms(spec.trailing_args, 0):
        terms[shift] = terms.get(shift, Fraction(0)) + coeff
    return ZetaCombination.from_dict(terms)


def mzv_eval_exact(spec: MZVSpec, m1: int) -> Fraction:
    """ζ_k(-m₁, -m₂, ..., -m_k) = Σ_e c_e ζ(-m₁ - e), exact"""
    if m1 < 0:
        raise ValueError(f"m1 doit être >= 0 (reçu {m1})")
    combination = mzv_reduce(spec)
    return sum((c * zeta_neg(m1 + e) for e, c in combination.terms), Fraction(0))


def mzv_eval_numeric(spec: MZVSpec, s1: ComplexLike, params=None,
                     tol: Optional[float] = None) -> complex:
    """
    Σ_e c_e ζ(s₁ - e) en flottant

    Args:
        spec: (m₂, ..., m_k)
        s1: Complexe avec Re s₁ <= 0, ou Re s₁ > 0 non entier
        params: EulerMaclaurinParams (choix automatique si None)
        tol: Tolérance de pôle (1e-12 par défaut)

    Raises:
        PoleHit: s₁ - e = 1 pour un décalage e de coefficient non nul
        DomainViolation: s₁ entier avec Re s₁ > 0
    """
    tol = DEFAULT_CONFIG.pole_tolerance if tol is None else tol
    s1 = to_complex(s1, "s1")
    combination = mzv_reduce(spec)

    # Le pôle est testé d'abord : c'est le cas exclu le plus précis
    for e, _ in combination.terms:
        if abs(s1 - e - 1) < tol:
            raise PoleHit(f"s1 - {e} = 1 : pôle de zeta atteint pour {_as_spec(spec)}")
    if s1.real > 0 and is_integer_value(s1, tol):
        raise DomainViolation(f"s1 = {s1} : entier positif hors des hypothèses")

    total = 0j
    for e, c in combination.terms:
        total += float(c) * riemann_zeta_num(s1 - e, params)
    return total
