#!/usr/bin/env python3
"""
Interface en ligne de commande de ZetaLab

Usage:
    python -m zetalab.cli zeta neg 1
    python -m zetalab.cli mzv reduce -m 0,0 --json
    python -m zetalab.cli mzv eval -m 0,0 --s1=-0.5+2i
    python -m zetalab.cli verify prop1 --max-m 30

Codes de sortie : 0 succès, 1 vérification en échec, 2 erreur d'usage,
3 argument hors domaine (pôle, domaine, convergence non certifiée).
"""

import argparse
import inspect
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from zetalab.bernoulli import bernoulli_number, bernoulli_poly
from zetalab.errors import ConvergenceUnsafe, DomainViolation
from zetalab.exact import format_rational
from zetalab.fourier import (FourierTruncation, bernoulli_fourier_convergence,
                             bernoulli_fourier_partial, convergence_table,
                             hurwitz_fourier_partial, hurwitz_neg_fourier_partial,
                             parseval_exact_negint, parseval_lhs_num, parseval_rhs, prop2_convergence,
                             prop2_lhs, prop2_rhs_truncated)
from zetalab.numerics import bernoulli_function, hurwitz_zeta_num
from zetalab.utils.config import load_config
from zetalab.utils.validation import parse_complex, parse_int_list, to_real
from zetalab.verification import SUITES, VerificationReport, run_all_suites, run_suite
from zetalab.zetasym import (MZVSpec, hurwitz_neg_poly, hurwitz_neg_poly_shifted, mzv_eval_exact,
                             mzv_eval_numeric, mzv_reduce, zeta_neg)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

__all__ = ['CommandRequest', 'build_parser', 'parse_request', 'run', 'main', 'format_rational',
           'setup_logger']


@dataclass
class CommandRequest:
    """
    Commande validée, prête à être exécutée

    Attributes:
        command: Nom complet de la sous-commande ("mzv reduce", "zeta neg", ...)
        options: Valeurs des options, déjà converties
        output_mode: "table" ou "json"
    """
    command: str
    options: Dict[str, Any] = field(default_factory=dict)
    output_mode: str = "table"


class UsageError(Exception):
    """Combinaison d'options incohérente (code de sortie 2)"""


# --- Types d'arguments -------------------------------------------------------

def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except (ValueError, DomainViolation) as e:
        raise argparse.ArgumentTypeError(str(e))


def _finite_float(text: str) -> float:
    try:
        return to_real(float(text), "alpha")
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _int_list_arg(text: str) -> List[int]:
    try:
        values = parse_int_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"entiers >= 0 attendus : {text!r}")
    return values


def _cutoff_list_arg(text: str) -> List[int]:
    values = _int_list_arg(text)
    if not values or 0 in values:
        raise argparse.ArgumentTypeError(f"troncatures >= 1 attendues : {text!r}")
    return values


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"entier attendu : {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"entier >= 0 attendu : {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("entier >= 1 attendu : 0")
    return value


# --- Parseur -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Sortie JSON compacte')
    common.add_argument('--verbose', '-v', action='store_true', help='Journal INFO sur stderr')
    common.add_argument('--log-file', help='Copie du journal dans un fichier')

    parser = argparse.ArgumentParser(
        prog='zetalab',
        description='Valeurs exactes des fonctions zêta multiples aux entiers négatifs',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exemples :
  zetalab bernoulli num 12
  zetalab hurwitz poly 2 --shifted
  zetalab mzv reduce -m 0,0 --json
  zetalab mzv eval -m 0,0 --m1 0
  zetalab mzv eval -m 1,2 --s1=-0.5+2i
  zetalab fourier partial --kind bernoulli --m 3 --alpha 0.3 --convergence 500,1000,2000
  zetalab prop2 rhs -m 1,1 --cutoff 5000
  zetalab parseval --s1 -0.3 --s2 -0.4
  zetalab verify all

Les complexes s'écrivent a, a+bi ou a-bi (utiliser --s1=-0.5+2i
lorsque la valeur commence par un signe moins).
        """
    )
    commands = parser.add_subparsers(dest='group', required=True, metavar='COMMANDE')

    bernoulli = commands.add_parser('bernoulli', help='Nombres et polynômes de Bernoulli')
    bernoulli_cmds = bernoulli.add_subparsers(dest='action', required=True)
    p = bernoulli_cmds.add_parser('num', parents=[common], help='B_n (B_1 = -1/2)')
    p.add_argument('n', type=_non_negative)
    p = bernoulli_cmds.add_parser('poly', parents=[common], help='B_m(α)')
    p.add_argument('m', type=_non_negative)

    zeta = commands.add_parser('zeta', help='Valeurs de zêta aux entiers négatifs')
    zeta_cmds = zeta.add_subparsers(dest='action', required=True)
    p = zeta_cmds.add_parser('neg', parents=[common], help='ζ(-m) exact')
    p.add_argument('m', type=_non_negative)

    hurwitz = commands.add_parser('hurwitz', help='ζ(-m, α) comme polynôme en α')
    hurwitz_cmds = hurwitz.add_subparsers(dest='action', required=True)
    p = hurwitz_cmds.add_parser('poly', parents=[common], help='ζ(-m, α) ou ζ(-m, α+1)')
    p.add_argument('m', type=_non_negative)
    p.add_argument('--shifted', action='store_true', help='Polynôme de ζ(-m, α+1)')

    mzv = commands.add_parser('mzv', help='Fonctions zêta multiples')
    mzv_cmds = mzv.add_subparsers(dest='action', required=True)
    p = mzv_cmds.add_parser('reduce', parents=[common], help='Réduction en combinaison de ζ(s₁ - e)')
    p.add_argument('-m', '--m-list', type=_int_list_arg, required=True,
                   help='Arguments m₂,...,m_k (ex. 0,0)')
    p = mzv_cmds.add_parser('eval', parents=[common], help='Évaluation exacte ou numérique')
    p.add_argument('-m', '--m-list', type=_int_list_arg, required=True)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument('--m1', type=_non_negative, help='s₁ = -m1 : valeur rationnelle exacte')
    target.add_argument('--s1', type=_complex_arg, help='s₁ complexe : valeur flottante')

    p = commands.add_parser('bfunc', parents=[common], help='Fonction de Bernoulli B(s, α)')
    p.add_argument('--s', type=_complex_arg, required=True)
    p.add_argument('--alpha', type=_finite_float, required=True)

    fourier = commands.add_parser('fourier', help='Sommes partielles de Fourier')
    fourier_cmds = fourier.add_subparsers(dest='action', required=True)
    p = fourier_cmds.add_parser('partial', parents=[common], help='Somme partielle tronquée')
    p.add_argument('--kind', choices=['bernoulli', 'hurwitz', 'lemma1'], default='bernoulli',
                   help='B_m(α), ζ(s, α) (Re s < 1) ou ζ(-m, α) via B_{m+1}')
    p.add_argument('--m', type=_non_negative)
    p.add_argument('--s', type=_complex_arg)
    p.add_argument('--alpha', type=_finite_float, required=True)
    p.add_argument('--cutoff', type=_positive, help='Troncature N (défaut : MZV_DEFAULT_CUTOFF ou 10000)')
    p.add_argument('--convergence', type=_cutoff_list_arg,
                   help='Rapport CSV pour plusieurs troncatures (ex. 500,1000,2000)')

    prop2 = commands.add_parser('prop2', help='∫∏B et somme de réseau associée')
    prop2_cmds = prop2.add_subparsers(dest='action', required=True)
    p = prop2_cmds.add_parser('lhs', parents=[common], help='Valeur exacte de ∫₀¹ ∏ B_{mᵢ+1}')
    p.add_argument('-m', '--m-list', type=_int_list_arg, required=True)
    p = prop2_cmds.add_parser('rhs', parents=[common], help='Somme de réseau tronquée')
    p.add_argument('-m', '--m-list', type=_int_list_arg, required=True)
    p.add_argument('--cutoff', type=_positive, help='Troncature N (défaut 2000)')
    p.add_argument('--convergence', type=_cutoff_list_arg)

    p = commands.add_parser('parseval', parents=[common], help='Identité de Parseval')
    p.add_argument('--s1', type=_complex_arg)
    p.add_argument('--s2', type=_complex_arg)
    p.add_argument('--a', type=_non_negative, help='Version exacte : s₁ = -a')
    p.add_argument('--b', type=_non_negative, help='Version exacte : s₂ = -b')
    p.add_argument('--panels', type=_positive)
    p.add_argument('--order', type=_positive)

    p = commands.add_parser('verify', parents=[common], help='Suites de vérification')
    p.add_argument('suite', choices=sorted(SUITES) + ['all'])
    p.add_argument('--max-m', type=_non_negative, help='Borne des indices (suites qui en ont une)')
    p.add_argument('--workers', type=_positive, help='Processus pour "verify all"')

    return parser


def parse_request(argv: Sequence[str]) -> CommandRequest:
    """
    Analyser la ligne de commande

    Raises:
        SystemExit: erreur d'usage (code 2, message argparse sur stderr)
    """
    args = vars(build_parser().parse_args(list(argv)))
    group, action = args.pop('group'), args.pop('action', None)
    output_mode = 'json' if args.pop('json', False) else 'table'
    command = f"{group} {action}" if action else group
    return CommandRequest(command, args, output_mode)


def setup_logger(verbose: bool = False, log_file: Optional[str] = None) -> logging.Logger:
    """Journal sur stderr (stdout reste réservé aux résultats)"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )
    return logging.getLogger(__name__)


# --- Rendu -------------------------------------------------------------------

def format_complex(z: complex) -> str:
    if z.imag == 0:
        return repr(z.real)
    return f"{z.real!r}{z.imag:+}i"


def _complex_json(z: complex) -> Dict[str, float]:
    return {"re": z.real, "im": z.imag}


@dataclass
class Outcome:
    text: str
    data: Any
    status: int = EXIT_OK


def _exact_outcome(value: Fraction, **context) -> Outcome:
    return Outcome(format_rational(value), {**context, "value": format_rational(value)})


def _float_outcome(value: complex, **context) -> Outcome:
    return Outcome(format_complex(value), {**context, "value": _complex_json(value)})


def _table_outcome(table: pd.DataFrame) -> Outcome:
    return Outcome(table.to_csv(index=False).rstrip("\n"), table.to_dict(orient="records"))


# --- Commandes ---------------------------------------------------------------

def _bernoulli_num(opts) -> Outcome:
    return _exact_outcome(bernoulli_number(opts['n']), n=opts['n'])


def _bernoulli_poly(opts) -> Outcome:
    poly = bernoulli_poly(opts['m'])
    return Outcome(str(poly), {"m": opts['m'], "coeffs": poly.to_json()})


def _zeta_neg(opts) -> Outcome:
    return _exact_outcome(zeta_neg(opts['m']), m=opts['m'])


def _hurwitz_poly(opts) -> Outcome:
    builder = hurwitz_neg_poly_shifted if opts['shifted'] else hurwitz_neg_poly
    poly = builder(opts['m'])
    return Outcome(str(poly), {"m": opts['m'], "shifted": opts['shifted'], "coeffs": poly.to_json()})


def _mzv_reduce(opts) -> Outcome:
    combination = mzv_reduce(MZVSpec(tuple(opts['m_list'])))
    return Outcome(str(combination), combination.to_json())


def _mzv_eval(opts) -> Outcome:
    spec = MZVSpec(tuple(opts['m_list']))
    if opts['m1'] is not None:
        return _exact_outcome(mzv_eval_exact(spec, opts['m1']), m1=opts['m1'])
    return _float_outcome(mzv_eval_numeric(spec, opts['s1']), s1=_complex_json(opts['s1']))


def _bfunc(opts) -> Outcome:
    return _float_outcome(bernoulli_function(opts['s'], opts['alpha']), alpha=opts['alpha'])


def _fourier_partial(opts) -> Outcome:
    kind, alpha = opts['kind'], opts['alpha']
    if kind == 'hurwitz':
        if opts['s'] is None:
            raise UsageError("--kind hurwitz exige --s")
        s = opts['s']
        approximate: Callable[[FourierTruncation], complex] = (
            lambda trunc: hurwitz_fourier_partial(s, alpha, trunc))
        reference = lambda: hurwitz_zeta_num(s, alpha)
    else:
        if opts['m'] is None:
            raise UsageError(f"--kind {kind} exige --m")
        m = opts['m']
        if kind == 'bernoulli':
            approximate = lambda trunc: bernoulli_fourier_partial(m, alpha, trunc)
            reference = lambda: float(bernoulli_poly(m)(Fraction(alpha)))
        else:
            approximate = lambda trunc: hurwitz_neg_fourier_partial(m, alpha, trunc)
            reference = lambda: float(hurwitz_neg_poly(m)(Fraction(alpha)))

    if opts['convergence']:
        if kind == 'bernoulli':
            return _table_outcome(bernoulli_fourier_convergence(m, alpha, opts['convergence']))
        exact = reference()
        return _table_outcome(convergence_table(lambda trunc: approximate(trunc).real,
                                                complex(exact).real, opts['convergence']))

    trunc = FourierTruncation(opts['cutoff']) if opts['cutoff'] else FourierTruncation.default()
    return _float_outcome(complex(approximate(trunc)), kind=kind, cutoff=trunc.cutoff)


def _prop2_lhs(opts) -> Outcome:
    return _exact_outcome(prop2_lhs(opts['m_list']), m_list=opts['m_list'])


def _prop2_rhs(opts) -> Outcome:
    if opts['convergence']:
        return _table_outcome(prop2_convergence(opts['m_list'], opts['convergence']))
    cutoff = opts['cutoff'] or load_config().lattice_cutoff
    value = prop2_rhs_truncated(opts['m_list'], FourierTruncation(cutoff))
    return Outcome(repr(value), {"m_list": opts['m_list'], "cutoff": cutoff, "value": value})


def _parseval(opts) -> Outcome:
    exact = opts['a'] is not None or opts['b'] is not None
    numeric = opts['s1'] is not None or opts['s2'] is not None
    if exact == numeric:
        raise UsageError("parseval : donner soit --s1/--s2, soit --a/--b")

    if exact:
        if opts['a'] is None or opts['b'] is None:
            raise UsageError("parseval : --a et --b vont ensemble")
        lhs, rhs = parseval_exact_negint(opts['a'], opts['b'])
        text = f"lhs = {format_rational(lhs)}\nrhs = {format_rational(rhs)}"
        return Outcome(text, {"a": opts['a'], "b": opts['b'],
                              "lhs": format_rational(lhs), "rhs": format_rational(rhs)})

    if opts['s1'] is None or opts['s2'] is None:
        raise UsageError("parseval : --s1 et --s2 vont ensemble")
    config = load_config()
    lhs = parseval_lhs_num(opts['s1'], opts['s2'],
                           panels=opts['panels'] or config.quadrature_panels,
                           order=opts['order'] or config.quadrature_order)
    rhs = parseval_rhs(opts['s1'], opts['s2'])
    text = f"lhs = {format_complex(lhs)}\nrhs = {format_complex(rhs)}\nabs_error = {abs(lhs - rhs):.3e}"
    return Outcome(text, {"lhs": _complex_json(lhs), "rhs": _complex_json(rhs),
                          "abs_error": abs(lhs - rhs)})


def _suite_options(name: str, opts) -> Dict[str, Any]:
    if opts['max_m'] is None:
        return {}
    if 'max_m' not in inspect.signature(SUITES[name]).parameters:
        logger.warning(f"--max-m ignoré pour la suite {name}")
        return {}
    return {'max_m': opts['max_m']}


def _render_report(report: VerificationReport) -> str:
    return f"{report}\n{report.to_dataframe().to_string(index=False)}"


def _verify(opts) -> Outcome:
    if opts['suite'] == 'all':
        reports = run_all_suites(opts['workers'])
        if opts['max_m'] is not None:
            logger.warning("--max-m ignoré pour \"verify all\"")
    else:
        reports = [run_suite(opts['suite'], **_suite_options(opts['suite'], opts))]

    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    if len(reports) == 1:
        return Outcome(_render_report(reports[0]), reports[0].to_json(), status)
    text = "\n\n".join(_render_report(r) for r in reports)
    return Outcome(text, [r.to_json() for r in reports], status)


HANDLERS: Dict[str, Callable[[Dict[str, Any]], Outcome]] = {
    'bernoulli num': _bernoulli_num,
    'bernoulli poly': _bernoulli_poly,
    'zeta neg': _zeta_neg,
    'hurwitz poly': _hurwitz_poly,
    'mzv reduce': _mzv_reduce,
    'mzv eval': _mzv_eval,
    'bfunc': _bfunc,
    'fourier partial': _fourier_partial,
    'prop2 lhs': _prop2_lhs,
    'prop2 rhs': _prop2_rhs,
    'parseval': _parseval,
    'verify': _verify,
}


def run(request: CommandRequest) -> Tuple[int, str]:
    """
    Exécuter une commande validée

    Returns:
        (code de sortie, texte à afficher). Le texte d'une erreur est
        destiné à stderr.
    """
    handler = HANDLERS.get(request.command)
    if handler is None:
        return EXIT_USAGE, f"Commande inconnue : {request.command}"

    try:
        outcome = handler(request.options)
    except UsageError as e:
        return EXIT_USAGE, f"Erreur d'usage : {e}"
    except (DomainViolation, ConvergenceUnsafe) as e:
        return EXIT_DOMAIN, f"{type(e).__name__} : {e}"
    except ValueError as e:
        return EXIT_USAGE, f"Erreur d'usage : {e}"

    if request.output_mode == 'json':
        return outcome.status, json.dumps(outcome.data, separators=(",", ":"), ensure_ascii=False)
    return outcome.status, outcome.text


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        request = parse_request(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logger(request.options.pop('verbose', False), request.options.pop('log_file', None))
    logger.info(f"Commande : {request.command} {request.options}")

    status, output = run(request)
    stream = sys.stdout if status in (EXIT_OK, EXIT_FAILED) else sys.stderr
    print(output, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
