from .numbers import (BernoulliTable, bernoulli_number, bernoulli_numbers, bernoulli_bar,
                      bernoulli_poly, bernoulli_bar_poly)
from .series import generating_function_series, check_generating_function

__all__ = ['BernoulliTable', 'bernoulli_number', 'bernoulli_numbers', 'bernoulli_bar',
           'bernoulli_poly', 'bernoulli_bar_poly', 'generating_function_series',
           'check_generating_function']
