from .hurwitz import (hurwitz_neg_poly, hurwitz_neg_poly_shifted, hurwitz_neg_via_lemma3,
                      zeta_neg, zeta_even_pi_coefficient)
from .mzv import (MZVSpec, ZetaCombination, mzv_level_polys, mzv_reduce, mzv_theorem_k3,
                  mzv_theorem_general, mzv_eval_exact, mzv_eval_numeric)

__all__ = ['hurwitz_neg_poly', 'hurwitz_neg_poly_shifted', 'hurwitz_neg_via_lemma3',
           'zeta_neg', 'zeta_even_pi_coefficient', 'MZVSpec', 'ZetaCombination',
           'mzv_level_polys', 'mzv_reduce', 'mzv_theorem_k3', 'mzv_theorem_general',
           'mzv_eval_exact', 'mzv_eval_numeric']
