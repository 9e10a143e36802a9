from .gamma import gamma
from .hurwitz import (EulerMaclaurinParams, hurwitz_zeta_num, riemann_zeta_num,
                      hurwitz_shift_defect, bernoulli_function)

__all__ = ['gamma', 'EulerMaclaurinParams', 'hurwitz_zeta_num', 'riemann_zeta_num',
           'hurwitz_shift_defect', 'bernoulli_function']
