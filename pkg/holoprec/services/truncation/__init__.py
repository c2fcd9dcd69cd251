from .norms import (OneNorm,
                    TransformedNorm,
                    bound_M,
                    norm_1,
                    trunc_matrix)
from .service import (default_chunks,
                      iterate_trunc_bin_split,
                      run,
                      trunc_bin_split,
                      trunc_params)
