#!/usr/bin/env python3
"""
Vérification complète - toutes les suites en parallèle

Exécute chaque suite de vérification dans un processus séparé, puis
écrit un CSV par suite, un résumé CSV, le rapport JSON complet et un
fichier log.

Usage:
    python scripts/verify_all.py --output verification_results/ --cpus 4
"""

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from datetime import datetime
from pathlib import Path

from tqdm import tqdm

# Import modules ZetaLab
sys.path.insert(0, str(Path(__file__).parent.parent))
from zetalab.verification import SUITES, generate_summary_report, run_suite


def setup_logger(output_dir: Path):
    """Configure le logging"""
    log_file = output_dir / "verify_all.log"

    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(log_file, encoding='utf-8'),
            logging.StreamHandler(sys.stderr)
        ]
    )

    return logging.getLogger(__name__)


def main():
    parser = argparse.ArgumentParser(
        description='Exécuter toutes les suites de vérification',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Exemples :
  python scripts/verify_all.py
  python scripts/verify_all.py --output results/ --cpus 2

Suites : {', '.join(SUITES)}
        """
    )
    parser.add_argument('--output', '-o', default='./verification_results',
                        help='Dossier de sortie (défaut: verification_results)')
    parser.add_argument('--cpus', '-c', type=int, default=4,
                        help='Nombre de processus')
    args = parser.parse_args()

    output_dir = Path(args.output)
    output_dir.mkdir(parents=True, exist_ok=True)
    logger = setup_logger(output_dir)

    print("\n" + "=" * 70)
    print("     VÉRIFICATION COMPLÈTE")
    print("=" * 70)
    print(f"Suites      : {len(SUITES)}")
    print(f"Sortie      : {output_dir}")
    print(f"CPUs        : {args.cpus}")
    print("=" * 70 + "\n")

    start_time = datetime.now()
    reports = []
    with ProcessPoolExecutor(max_workers=args.cpus) as executor:
        futures = {executor.submit(run_suite, name): name for name in SUITES}
        with tqdm(total=len(futures), desc="   Suites", unit=" suite", ncols=100) as progress_bar:
            for future in as_completed(futures):
                name = futures[future]
                try:
                    report = future.result()
                except Exception as e:
                    logger.error(f"Suite {name} interrompue : {e}")
                    progress_bar.update(1)
                    continue
                reports.append(report)
                logger.info(str(report))
                for case in report.failures:
                    logger.warning(f"  {name} / {case.case_id} : {case.lhs} != {case.rhs}")
                progress_bar.update(1)

    reports.sort(key=lambda report: report.suite)
    for report in reports:
        report.to_dataframe().to_csv(output_dir / f"{report.suite}_cases.csv", index=False)
    summary = generate_summary_report(reports, output_dir / "verification_summary.csv")
    with open(output_dir / "verification_report.json", 'w', encoding='utf-8') as f:
        json.dump([report.to_json() for report in reports], f, indent=2, ensure_ascii=False)

    duration = (datetime.now() - start_time).total_seconds()
    all_passed = len(reports) == len(SUITES) and all(report.passed for report in reports)

    print("\n" + "=" * 70)
    print("     VÉRIFICATION TERMINÉE !")
    print("=" * 70)
    print(summary.to_string(index=False))
    print(f"\nDurée totale     : {duration:.0f} secondes")
    print(f"Résultats dans   : {output_dir}/")
    print(f"Statut global    : {'PASS' if all_passed else 'FAIL'}")
    print("=" * 70 + "\n")

    sys.exit(0 if all_passed else 1)


if __name__ == "__main__":
    main()
