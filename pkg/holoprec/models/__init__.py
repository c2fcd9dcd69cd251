from .bench import (CSV_COLUMNS,
                    BenchRecord,
                    Scaling)
from .certificate import (NormTransform,
                          TailCertificate)
from .evaluation import (Comparison,
                         EvalRequest,
                         EvalResult)
from .ode import (EvalPoint,
                  InitialVector,
                  Recurrence,
                  ThetaODE)
from .problem import Problem
from .product import ExactProduct
from .truncation import (TraceRecord,
                         TruncParams)
