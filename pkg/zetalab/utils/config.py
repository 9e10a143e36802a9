"""
Configuration par défaut de ZetaLab

Les valeurs par défaut sont regroupées ici ; la variable d'environnement
MZV_DEFAULT_CUTOFF remplace la troncature Fourier par défaut.
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

logger = logging.getLogger(__name__)

CUTOFF_ENV_VAR = "MZV_DEFAULT_CUTOFF"


@dataclass(frozen=True)
class ZetaLabConfig:
    """
    Paramètres numériques par défaut

    Attributes:
        fourier_cutoff: Troncature N des séries de Fourier (indices 0 < |n| <= N)
        lattice_cutoff: Troncature N des sommes de réseau
        quadrature_panels: Nombre de panneaux géométriques vers α = 0
        quadrature_order: Nombre de noeuds de Gauss-Legendre par panneau
        pole_tolerance: Distance minimale à un pôle
        em_head_min: Longueur minimale de la somme directe d'Euler-Maclaurin
        em_corrections: Nombre de corrections B_2j d'Euler-Maclaurin
        fourier_branch_max_real: Re s en dessous duquel ζ(s, α) passe par la formule de Hurwitz
        fourier_branch_max_alpha: α maximal pour cette branche (α est ramené dans ]0, 1])
        fourier_branch_tolerance: Reste toléré de la série de Hurwitz (relatif si |valeur| > 1)
        fourier_branch_max_terms: Plafond du nombre de termes de cette série
        series_order: Ordre de troncature de la série génératrice
    """
    fourier_cutoff: int = 10_000
    lattice_cutoff: int = 2000
    quadrature_panels: int = 40
    quadrature_order: int = 20
    pole_tolerance: float = 1e-12
    em_head_min: int = 16
    em_corrections: int = 12
    fourier_branch_max_real: float = -2.5
    fourier_branch_max_alpha: float = 16.0
    fourier_branch_tolerance: float = 1e-14
    fourier_branch_max_terms: int = 500_000
    series_order: int = 16


DEFAULT_CONFIG = ZetaLabConfig()


def load_config(environ: Optional[Mapping[str, str]] = None) -> ZetaLabConfig:
    """
    Construire la configuration en tenant compte de l'environnement

    Args:
        environ: Variables d'environnement (os.environ par défaut)

    Returns:
        ZetaLabConfig
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(CUTOFF_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_CONFIG

    try:
        cutoff = int(raw)
    except ValueError:
        cutoff = 0
    if cutoff < 1:
        logger.warning(f"{CUTOFF_ENV_VAR}={raw!r} ignoré (entier positif attendu)")
        return DEFAULT_CONFIG

    logger.debug(f"Troncature Fourier lue dans {CUTOFF_ENV_VAR} : {cutoff}")
    return replace(DEFAULT_CONFIG, fourier_cutoff=cutoff)
