from .dyadic import (Dyadic,
                     DyadicComplexMatrix,
                     DyadicComplex,
                     bit_size,
                     trunc_gaussian,
                     trunc_scalar)
from .gaussian import (GaussianInt,
                       GaussianRational)
from .polynomials import Polynomial
