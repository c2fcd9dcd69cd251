from .service import (TailConstants,
                      heuristic_order,
                      tail_constants,
                      tail_steps,
                      truncation_order,
                      verify_certificate)
from .transform import (cluster_roots,
                        confluent_vandermonde,
                        eigenvalue_hints,
                        modulus_norm,
                        opt_norm_transform)
