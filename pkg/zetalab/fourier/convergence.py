"""
Rapports de convergence des sommes tronquées

Chaque rapport est un DataFrame (cutoff, approximation, reference,
abs_error) exportable en CSV, comme les rapports de GenomeStats.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterable, Optional, Sequence

import matplotlib.pyplot as plt
import pandas as pd
import seaborn as sns

from zetalab.bernoulli import bernoulli_poly

from .lattice import prop2_lhs, prop2_rhs_truncated
from .series import FourierTruncation, bernoulli_fourier_partial

logger = logging.getLogger(__name__)

CONVERGENCE_COLUMNS = ["cutoff", "approximation", "reference", "abs_error"]


def convergence_table(approximate: Callable[[FourierTruncation], float], reference: float,
                      cutoffs: Iterable[int]) -> pd.DataFrame:
    """
    Évaluer une somme tronquée pour plusieurs troncatures

    Args:
        approximate: Fonction FourierTruncation -> valeur approchée
        reference: Valeur exacte (en flottant)
        cutoffs: Troncatures N à tester

    Returns:
        DataFrame avec colonnes cutoff, approximation, reference, abs_error
    """
    rows = []
    for cutoff in cutoffs:
        value = approximate(FourierTruncation(int(cutoff)))
        rows.append({
            'cutoff': int(cutoff),
            'approximation': value,
            'reference': reference,
            'abs_error': abs(value - reference),
        })
        logger.debug(f"N = {cutoff} : erreur {rows[-1]['abs_error']:.3e}")
    return pd.DataFrame(rows, columns=CONVERGENCE_COLUMNS)


def bernoulli_fourier_convergence(m: int, alpha: float, cutoffs: Iterable[int]) -> pd.DataFrame:
    """Convergence de la série de Fourier de B_m(α) vers la valeur exacte"""
    reference = float(bernoulli_poly(m)(Fraction(alpha)))
    return convergence_table(lambda trunc: bernoulli_fourier_partial(m, alpha, trunc),
                             reference, cutoffs)


def prop2_convergence(m_list: Sequence[int], cutoffs: Iterable[int]) -> pd.DataFrame:
    """Convergence de la somme de réseau vers ∫₀¹ ∏ B_{mᵢ+1}"""
    reference = float(prop2_lhs(m_list))
    return convergence_table(lambda trunc: prop2_rhs_truncated(m_list, trunc),
                             reference, cutoffs)


def plot_convergence(report: pd.DataFrame, title: str, output_file: Optional[str] = None):
    """
    Tracer l'erreur absolue en fonction de N (échelle log-log)

    Args:
        report: DataFrame issu de convergence_table
        title: Titre du graphique
        output_file: Chemin du PNG (affichage interactif sinon)
    """
    errors = report[report['abs_error'] > 0]

    plt.figure(figsize=(10, 6))
    plt.loglog(errors['cutoff'], errors['abs_error'], marker='o', color='steelblue')
    plt.xlabel('Troncature N', fontsize=12)
    plt.ylabel('Erreur absolue', fontsize=12)
    plt.title(title, fontsize=14, fontweight='bold')
    plt.grid(which='both', alpha=0.3)
    plt.tight_layout()

    if output_file:
        plt.savefig(output_file, dpi=300, bbox_inches='tight')
        plt.close()
        print(f"✅ Graphique sauvegardé : {output_file}")
    else:
        plt.show()


def plot_convergence_comparison(studies: Dict[str, pd.DataFrame], output_file: Optional[str] = None):
    """Superposer plusieurs rapports de convergence (une courbe par étude)"""
    combined = pd.concat([report.assign(study=name) for name, report in studies.items()],
                         ignore_index=True)
    combined = combined[combined['abs_error'] > 0]

    sns.set_style("whitegrid")
    plt.figure(figsize=(10, 6))
    ax = sns.lineplot(data=combined, x='cutoff', y='abs_error', hue='study', marker='o')
    ax.set(xscale='log', yscale='log', xlabel='Troncature N', ylabel='Erreur absolue')
    plt.title('Convergence des sommes tronquées', fontsize=14, fontweight='bold')
    plt.tight_layout()

    if output_file:
        plt.savefig(output_file, dpi=300, bbox_inches='tight')
        plt.close()
        print(f"✅ Graphique sauvegardé : {output_file}")
    else:
        plt.show()


def quick_convergence_study(cutoffs: Sequence[int] = (500, 1000, 2000, 4000),
                            output_dir: str = "./convergence_results/"):
    """
    Étude rapide : séries de Fourier de B_2, B_3 et sommes de réseau
    (1,1), (0,0), avec CSV et graphiques

    Example:
        >>> quick_convergence_study(output_dir="./results/")
    """
    output_path = Path(output_dir)
    output_path.mkdir(parents=True, exist_ok=True)

    studies = {
        'fourier_B2_alpha0.3': bernoulli_fourier_convergence(2, 0.3, cutoffs),
        'fourier_B3_alpha0.3': bernoulli_fourier_convergence(3, 0.3, cutoffs),
        'lattice_1_1': prop2_convergence((1, 1), cutoffs),
        'lattice_0_0': prop2_convergence((0, 0), cutoffs),
    }
    for name, report in studies.items():
        report.to_csv(output_path / f"{name}.csv", index=False)
        plot_convergence(report, f"Convergence - {name}", output_path / f"{name}.png")
        print(f"✅ Rapport sauvegardé : {output_path / f'{name}.csv'}")
    plot_convergence_comparison(studies, output_path / "convergence_comparison.png")

    print(f"\n✅ Étude terminée ! Résultats dans {output_dir}")
    return studies
