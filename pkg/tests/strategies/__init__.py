from .arithmetic import (big_gaussian_integers,
                         bits_counts,
                         exponents,
                         gaussian_integers,
                         gaussian_rationals,
                         invalid_tolerances,
                         non_negative_rationals,
                         non_zero_gaussian_integers,
                         non_zero_gaussian_rationals,
                         polynomials,
                         rationals,
                         real_big_integers,
                         square_matrices,
                         tolerances)
from .odes import (catalog_names,
                   catalog_problems,
                   dz_operators,
                   precisions,
                   problems,
                   series,
                   theta_odes,
                   thresholds)
