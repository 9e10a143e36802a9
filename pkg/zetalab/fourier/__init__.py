"""
Module Fourier

- Séries de Fourier tronquées de B_m(α) et ζ(s, α)
- Identité de Parseval (numérique et exacte)
- Sommes de réseau et coefficients de Fourier des produits de B_m
- Rapports de convergence
"""

from .series import (FourierTruncation, bernoulli_fourier_partial, hurwitz_fourier_partial,
                     hurwitz_neg_fourier_partial)
from .parseval import parseval_rhs, parseval_lhs_num, parseval_exact_negint
from .lattice import (LatticeSum, prop2_lhs, prop2_lhs_via_poly, prop2_rhs_truncated,
                      product_fourier_coeff, exact_product_fourier_coeff, product_poly)
from .convergence import (convergence_table, bernoulli_fourier_convergence, prop2_convergence,
                          plot_convergence, plot_convergence_comparison,
                          quick_convergence_study)

__all__ = ['FourierTruncation', 'bernoulli_fourier_partial', 'hurwitz_fourier_partial',
           'hurwitz_neg_fourier_partial', 'parseval_rhs', 'parseval_lhs_num',
           'parseval_exact_negint', 'LatticeSum', 'prop2_lhs', 'prop2_lhs_via_poly',
           'prop2_rhs_truncated', 'product_fourier_coeff', 'exact_product_fourier_coeff',
           'product_poly', 'convergence_table', 'bernoulli_fourier_convergence',
           'prop2_convergence', 'plot_convergence', 'plot_convergence_comparison',
           'quick_convergence_study']
