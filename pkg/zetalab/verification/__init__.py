from .suites import (VerificationCase, VerificationReport, SUITES, run_suite, run_all_suites,
                     generate_summary_report, quick_verification)

__all__ = ['VerificationCase', 'VerificationReport', 'SUITES', 'run_suite', 'run_all_suites',
           'generate_summary_report', 'quick_verification']
