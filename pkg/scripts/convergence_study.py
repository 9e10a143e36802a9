#!/usr/bin/env python3
"""
Étude de convergence des sommes de Fourier et de réseau

Usage:
    python scripts/convergence_study.py --cutoffs 500,1000,2000,4000 --output convergence/
"""

import argparse
import sys
from pathlib import Path

# Import du module
sys.path.insert(0, str(Path(__file__).parent.parent))
from zetalab.fourier import quick_convergence_study
from zetalab.utils.validation import parse_int_list


def main():
    parser = argparse.ArgumentParser(
        description='Mesurer la convergence des sommes tronquées',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exemples :
  python scripts/convergence_study.py
  python scripts/convergence_study.py --cutoffs 250,500,1000 --output results/

Le script génère automatiquement :
  - Un CSV par étude (cutoff, approximation, reference, abs_error)
  - Un graphique log-log par étude
  - Un graphique comparatif
        """
    )
    parser.add_argument('--cutoffs', default='500,1000,2000,4000',
                        help='Troncatures N séparées par des virgules')
    parser.add_argument('--output', '-o', default='./convergence_results',
                        help='Dossier de sortie (défaut: ./convergence_results)')
    args = parser.parse_args()

    try:
        cutoffs = parse_int_list(args.cutoffs)
        if not cutoffs or min(cutoffs) < 1:
            raise ValueError(f"Troncatures >= 1 attendues : {args.cutoffs}")
        quick_convergence_study(cutoffs, args.output)
    except ValueError as e:
        print(f"\n❌ ERREUR : {e}")
        sys.exit(1)
    except Exception as e:
        print(f"\n❌ ERREUR INATTENDUE : {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
