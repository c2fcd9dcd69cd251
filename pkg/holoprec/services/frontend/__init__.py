from .radius import (check_in_disk,
                     radius_lower_bound,
                     refined_radius_lower_bound)
from .service import (check_ordinary,
                      derive_recurrence,
                      hat_step_matrix,
                      initial_vector,
                      step_matrix,
                      stirling_numbers,
                      theta_from_dz)
from .asymptotics import (deviation,
                          deviation_polynomials,
                          is_entire,
                          leading_coefficients,
                          limit_companion)
