"""
Exceptions du toolkit ZetaLab

Hiérarchie :
- ZetaLabError : base commune
- DomainViolation : argument hors des hypothèses de l'opération
- PoleHit : argument sur un pôle (cas particulier de DomainViolation)
- ConvergenceUnsafe : somme de réseau non certifiée absolument convergente
"""


class ZetaLabError(Exception):
    """Erreur de base du toolkit"""


class DomainViolation(ZetaLabError, ValueError):
    """Argument en dehors du domaine de validité"""


class PoleHit(DomainViolation):
    """Argument situé sur un pôle (ζ en 1, Γ aux entiers négatifs ou nuls)"""


class ConvergenceUnsafe(ZetaLabError, ValueError):
    """Somme seulement conditionnellement convergente : pas de valeur fiable"""
