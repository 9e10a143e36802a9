"""
Suites de vérification des identités exactes et numériques

Chaque suite produit un VerificationReport : liste de cas (identifiant,
statut, membres gauche/droit, écart) ; la suite passe si tous ses cas
passent. Les rapports s'exportent en DataFrame/CSV et en JSON.
"""

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Union

import pandas as pd

from zetalab.bernoulli import (bernoulli_bar, bernoulli_bar_poly, bernoulli_number,
                               bernoulli_poly, check_generating_function)
from zetalab.errors import DomainViolation, PoleHit
from zetalab.exact import RationalPoly, format_rational, poly_shift
from zetalab.fourier import (FourierTruncation, bernoulli_fourier_partial,
                             exact_product_fourier_coeff, hurwitz_fourier_partial,
                             hurwitz_neg_fourier_partial, parseval_exact_negint,
                             parseval_lhs_num, parseval_rhs, prop2_lhs, prop2_lhs_via_poly,
                             prop2_rhs_truncated, product_fourier_coeff)
from zetalab.numerics import (bernoulli_function, gamma, hurwitz_shift_defect,
                              hurwitz_zeta_num, riemann_zeta_num)
from zetalab.zetasym import (MZVSpec, ZetaCombination, hurwitz_neg_poly,
                             hurwitz_neg_poly_shifted, hurwitz_neg_via_lemma3, mzv_eval_exact,
                             mzv_eval_numeric, mzv_level_polys, mzv_reduce, mzv_theorem_general,
                             mzv_theorem_k3)

logger = logging.getLogger(__name__)

Exact = Union[Fraction, RationalPoly, ZetaCombination]

ALPHA_GRID = (0.1, 0.25, 0.5, 0.9, 1.0, 2.5)


@dataclass
class VerificationCase:
    case_id: str
    passed: bool
    lhs: str
    rhs: str
    error: float

    def to_json(self) -> dict:
        return {
            "case_id": self.case_id,
            "status": "pass" if self.passed else "fail",
            "lhs": self.lhs,
            "rhs": self.rhs,
            "error": self.error,
        }


@dataclass
class VerificationReport:
    """
    Rapport d'une suite de vérification

    Attributes:
        suite: Nom de la suite
        cases: Cas vérifiés, dans l'ordre d'exécution
    """
    suite: str
    cases: List[VerificationCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> List[VerificationCase]:
        return [case for case in self.cases if not case.passed]

    def add_exact(self, case_id: str, lhs: Exact, rhs: Exact):
        """Cas exact : égalité structurelle, tolérance nulle"""
        self.cases.append(VerificationCase(case_id, lhs == rhs, _render(lhs), _render(rhs),
                                           _exact_gap(lhs, rhs)))

    def add_numeric(self, case_id: str, lhs: complex, rhs: complex, tol: float,
                    relative: bool = False):
        """Cas numérique : |lhs - rhs| <= tol (relatif à |rhs| si demandé)"""
        error = abs(complex(lhs) - complex(rhs))
        if relative and rhs != 0:
            error /= abs(complex(rhs))
        self.cases.append(VerificationCase(case_id, error <= tol, _render(lhs), _render(rhs), error))

    def add_check(self, case_id: str, ok: bool, observed: str, expected: str):
        self.cases.append(VerificationCase(case_id, ok, observed, expected, 0.0 if ok else 1.0))

    def to_dataframe(self) -> pd.DataFrame:
        rows = [case.to_json() for case in self.cases]
        return pd.DataFrame(rows, columns=["case_id", "status", "lhs", "rhs", "error"])

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "overall": "pass" if self.passed else "fail",
            "cases": [case.to_json() for case in self.cases],
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"Suite {self.suite} : {status} "
                f"({len(self.cases) - len(self.failures)}/{len(self.cases)} cas)")


def _render(value) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, complex):
        if value.imag == 0:
            return repr(value.real)
        return f"{value.real!r}{value.imag:+}i"
    return str(value)


def _exact_gap(lhs: Exact, rhs: Exact) -> float:
    if lhs == rhs:
        return 0.0
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return float(abs(lhs - rhs))
    if isinstance(lhs, RationalPoly) and isinstance(rhs, RationalPoly):
        return float(max(abs(c) for c in (lhs - rhs).coeffs))
    if isinstance(lhs, ZetaCombination) and isinstance(rhs, ZetaCombination):
        left, right = lhs.as_dict(), rhs.as_dict()
        return float(max(abs(left.get(e, 0) - right.get(e, 0)) for e in set(left) | set(right)))
    # jamais inf : le JSON produit doit rester standard
    return 1.0


# --- Suites -----------------------------------------------------------------

def verify_lemmas(max_m: int = 30, series_order: int = 16) -> VerificationReport:
    """Décalages (ζ et B_m), nombres décalés, moyenne nulle, série génératrice"""
    report = VerificationReport("lemmas")
    for m in range(max_m + 1):
        report.add_exact(f"hurwitz-shift m={m}",
                         hurwitz_neg_poly(m) - hurwitz_neg_poly_shifted(m),
                         RationalPoly.monomial(m))
        expected = RationalPoly.monomial(m - 1, m) if m > 0 else RationalPoly()
        report.add_exact(f"bernoulli-shift m={m}",
                         poly_shift(bernoulli_poly(m)) - bernoulli_poly(m), expected)
        report.add_exact(f"bar-poly m={m}", bernoulli_bar_poly(m), poly_shift(bernoulli_poly(m)))
        report.add_exact(f"value-at-0 m={m}", bernoulli_poly(m)(0), bernoulli_number(m))
        report.add_exact(f"value-at-1 m={m}", bernoulli_poly(m)(1), bernoulli_bar(m))
        if m >= 1:
            report.add_exact(f"zero-mean m={m}", bernoulli_poly(m).integrate_01(), Fraction(0))

    mismatches = check_generating_function(series_order)
    report.add_check(f"generating-function order={series_order}", not mismatches,
                     str(mismatches), "[]")
    return report


def verify_prop1(max_m: int = 30) -> VerificationReport:
    """ζ(-m, α) construit depuis les ζ(-k) = -B_{m+1}(α)/(m+1)"""
    report = VerificationReport("prop1")
    for m in range(max_m + 1):
        report.add_exact(f"prop1 m={m}", hurwitz_neg_via_lemma3(m), hurwitz_neg_poly(m))
    return report


def verify_prop2(max_entry: int = 4, max_rank: int = 3, cutoff: int = 5000) -> VerificationReport:
    """Deux routes exactes pour ∫∏B, et la somme de réseau tronquée"""
    report = VerificationReport("prop2")
    for rank in range(1, max_rank + 1):
        for m_list in itertools.product(range(max_entry + 1), repeat=rank):
            report.add_exact(f"exact {m_list}", prop2_lhs(m_list), prop2_lhs_via_poly(m_list))
    for m in range(max_entry + 1):
        report.add_numeric(f"lattice ({m},)", prop2_rhs_truncated((m,), FourierTruncation(cutoff)),
                           0.0, 0.0)
    report.add_numeric(f"lattice (1, 1) N={cutoff}",
                       prop2_rhs_truncated((1, 1), FourierTruncation(cutoff)), 1 / 180, 1e-6)
    report.add_numeric("lattice (0, 0) N=2000",
                       prop2_rhs_truncated((0, 0), FourierTruncation(2000)), 1 / 12, 1e-3)
    return report


def verify_parseval(max_ab: int = 8) -> VerificationReport:
    """Parseval exact aux entiers négatifs et numérique en (-0.3, -0.4)"""
    report = VerificationReport("parseval")
    for a in range(max_ab + 1):
        for b in range(max_ab + 1):
            lhs, rhs = parseval_exact_negint(a, b)
            report.add_exact(f"exact a={a} b={b}", lhs, rhs)
    report.add_numeric("numeric s1=-0.3 s2=-0.4", parseval_lhs_num(-0.3, -0.4),
                       parseval_rhs(-0.3, -0.4), 1e-6)
    report.add_numeric("closed-form s1=0 s2=0", parseval_rhs(0, 0), 1 / 12, 1e-10)
    report.add_numeric("quadrature s1=0 s2=0", parseval_lhs_num(0, 0), 1 / 12, 1e-8)
    return report


def verify_fourier(cutoff: int = 10_000) -> VerificationReport:
    """Sommes partielles de Fourier contre les polynômes exacts"""
    report = VerificationReport("fourier")
    trunc = FourierTruncation(cutoff)
    report.add_numeric(f"B_3(0.3) N={cutoff}", bernoulli_fourier_partial(3, 0.3, trunc),
                       float(bernoulli_poly(3)(Fraction(3, 10))), 1e-6)
    report.add_numeric(f"zeta(-2, 0.4) N={cutoff}", hurwitz_fourier_partial(-2, 0.4, trunc),
                       float(hurwitz_neg_poly(2)(Fraction(2, 5))), 1e-5)
    report.add_numeric("B_1(0.5) sawtooth", bernoulli_fourier_partial(1, 0.5, trunc), 0.0, 1e-12)
    for m in range(1, 6):
        for alpha in (0.1, 0.3, 0.7):
            report.add_numeric(f"lemma1 m={m} alpha={alpha}",
                               hurwitz_neg_fourier_partial(m, alpha, trunc),
                               float(hurwitz_neg_poly(m)(Fraction(alpha))), 1e-4)
    for m_list, target in (((1,), 5), ((1, 1), 3), ((2, 3), -2)):
        report.add_numeric(f"coefficient {m_list} N={target}",
                           product_fourier_coeff(m_list, target, FourierTruncation(2000)),
                           exact_product_fourier_coeff(m_list, target), 1e-8)
    return report


def verify_mzv_crosscheck(max_m: int = 10, numeric_max_m: int = 3) -> VerificationReport:
    """Formule k = 3 contre la récurrence, oracles k = 2, continuation numérique"""
    report = VerificationReport("mzv-crosscheck")
    for m2 in range(max_m + 1):
        for m3 in range(max_m + 1):
            report.add_exact(f"theorem ({m2}, {m3})", mzv_theorem_k3(m2, m3),
                             mzv_reduce(MZVSpec((m2, m3))))

    report.add_exact("k=2 oracle (0)", mzv_reduce(MZVSpec((0,))),
                     ZetaCombination.from_dict({1: Fraction(-1), 0: Fraction(-1, 2)}))
    report.add_exact("exact value (0, 0) at s1=0", mzv_eval_exact(MZVSpec((0, 0)), 0),
                     Fraction(-1, 4))
    for args in ((0, 0, 0), (1, 0, 2), (2, 1, 0, 1)):
        spec = MZVSpec(args)
        report.add_exact(f"nested formula {args}", mzv_theorem_general(spec), mzv_reduce(spec))

    # P_2(n) contre les valeurs numériques de ζ(-(m2 + e), n + 1)
    for m2 in range(numeric_max_m + 1):
        for m3 in range(numeric_max_m + 1):
            top, bottom = mzv_level_polys(MZVSpec((m2, m3)))
            for n in (1, 5, 10):
                assembled = sum(float(c) * hurwitz_zeta_num(-(m2 + e), n + 1)
                                for e, c in enumerate(top.coeffs) if c)
                report.add_numeric(f"continuation ({m2}, {m3}) n={n}", assembled,
                                   float(bottom(n)), 1e-9, relative=True)

    report.add_check("pole (0) at s1=2", _raises(lambda: mzv_eval_numeric(MZVSpec((0,)), 2), PoleHit),
                     "PoleHit", "PoleHit")
    report.add_check("domain (0, 0) at s1=3",
                     _raises(lambda: mzv_eval_numeric(MZVSpec((0, 0)), 3), DomainViolation),
                     "DomainViolation", "DomainViolation")
    report.add_numeric("numeric (0, 0) at s1=0", mzv_eval_numeric(MZVSpec((0, 0)), 0), -0.25, 1e-9)
    return report


def verify_numerics(max_m: int = 10) -> VerificationReport:
    """Euler-Maclaurin contre les valeurs exactes, B(s, α), Γ"""
    report = VerificationReport("numerics")
    for m in range(max_m + 1):
        for alpha in ALPHA_GRID:
            report.add_numeric(f"hurwitz s=-{m} alpha={alpha}", hurwitz_zeta_num(-m, alpha),
                               float(hurwitz_neg_poly(m)(Fraction(alpha))), 1e-10)
    report.add_numeric("zeta(2)", riemann_zeta_num(2), math.pi ** 2 / 6, 1e-10)
    report.add_numeric("zeta(4)", riemann_zeta_num(4), math.pi ** 4 / 90, 1e-10)
    for m in range(9):
        for alpha in (0.25, 0.7, 1.5):
            report.add_numeric(f"bfunc s=-{m} alpha={alpha}", bernoulli_function(-m, alpha),
                               float(bernoulli_poly(m)(Fraction(alpha))), 1e-9)
    report.add_check("bfunc s=0 exact", bernoulli_function(0, 0.3) == 1, "1", "1")
    for s in (-2.5 + 1j, 0.5 + 3j, 2.5 - 1j, -0.3):
        report.add_numeric(f"forward shift s={s}", hurwitz_shift_defect(s, 0.75), 0, 1e-10)
    report.add_numeric("gamma(1/2)^2 = pi", gamma(0.5) ** 2, math.pi, 1e-12)
    return report


def _raises(action: Callable[[], object], error: type) -> bool:
    try:
        action()
    except error:
        return True
    return False


SUITES: Dict[str, Callable[..., VerificationReport]] = {
    'lemmas': verify_lemmas,
    'prop1': verify_prop1,
    'prop2': verify_prop2,
    'parseval': verify_parseval,
    'fourier': verify_fourier,
    'mzv-crosscheck': verify_mzv_crosscheck,
    'numerics': verify_numerics,
}


def run_suite(name: str, **options) -> VerificationReport:
    """
    Exécuter une suite par son nom

    Raises:
        ValueError: suite inconnue
    """
    if name not in SUITES:
        raise ValueError(f"Suite inconnue : {name} (disponibles : {', '.join(SUITES)})")
    logger.info(f"Suite {name} : démarrage")
    report = SUITES[name](**options)
    logger.info(str(report))
    return report


def run_all_suites(max_workers: Optional[int] = None) -> List[VerificationReport]:
    """
    Exécuter toutes les suites en parallèle (processus)

    Returns:
        Rapports triés par nom de suite (ordre indépendant de l'exécution)
    """
    if max_workers == 1:
        reports = [run_suite(name) for name in SUITES]
    else:
        reports = []
        with ProcessPoolExecutor(max_workers=max_workers) as executor:
            futures = {executor.submit(run_suite, name): name for name in SUITES}
            for future in as_completed(futures):
                reports.append(future.result())
    return sorted(reports, key=lambda report: report.suite)


def generate_summary_report(reports: List[VerificationReport],
                            output_file: Optional[str] = None) -> pd.DataFrame:
    """
    Résumé par suite : nombre de cas, échecs, écart maximal

    Args:
        reports: Rapports de suites
        output_file: CSV de sortie (optionnel)
    """
    summary = pd.DataFrame([{
        'suite': report.suite,
        'cases': len(report.cases),
        'failures': len(report.failures),
        'max_error': max((case.error for case in report.cases), default=0.0),
        'overall': 'pass' if report.passed else 'fail',
    } for report in reports])

    if output_file:
        summary.to_csv(output_file, index=False)
        print(f"✅ Rapport résumé sauvegardé : {output_file}")
    return summary


def quick_verification(output_dir: str = "./verification_results/",
                       max_workers: Optional[int] = None) -> bool:
    """
    Toutes les suites, un CSV par suite et un résumé

    Returns:
        True si toutes les suites passent
    """
    output_path = Path(output_dir)
    output_path.mkdir(parents=True, exist_ok=True)

    reports = run_all_suites(max_workers)
    for report in reports:
        report.to_dataframe().to_csv(output_path / f"{report.suite}_cases.csv", index=False)
        print(report)
    summary = generate_summary_report(reports, output_path / "verification_summary.csv")
    print(summary.to_string(index=False))

    print(f"\n✅ Vérification terminée ! Résultats dans {output_dir}")
    return all(report.passed for report in reports)
