from dataclasses import (dataclass,
                         field)
from fractions import Fraction
from hashlib import sha256
from typing import (List,
                    Optional,
                    Tuple)

from holoprec.arithmetic import (Dyadic,
                                 DyadicComplex,
                                 GaussianRational)
from holoprec.config import (DEFAULT_BOUND_MODE,
                             DEFAULT_HINT_PRECISIONS,
                             DEFAULT_THRESHOLD,
                             DEFAULT_WORKERS)
from .certificate import TailCertificate
from .ode import (EvalPoint,
                  ThetaODE)
from .truncation import TraceRecord


@dataclass(frozen=True)
class EvalRequest:
    ode: ThetaODE
    initial_values: Tuple[GaussianRational, ...]
    point: EvalPoint
    precision: int
    mode: str = 'trunc'
    threshold: int = DEFAULT_THRESHOLD
    chunks: Optional[int] = None
    bound_mode: str = DEFAULT_BOUND_MODE
    assume_in_disk: bool = False
    refine_norm: bool = False
    workers: int = DEFAULT_WORKERS
    hint_precisions: Tuple[int, ...] = DEFAULT_HINT_PRECISIONS
    trace: bool = False


@dataclass(frozen=True)
class EvalResult:
    mode: str
    precision: int
    value: DyadicComplex
    error_bound: Dyadic
    order: int
    certified: bool
    assumed_in_disk: bool
    ledger_current: int
    ledger_peak: int
    wall_time_ns: int = field(compare=False)
    chunks: Optional[int] = None
    norm_bound: Optional[Fraction] = None
    certificate: Optional[TailCertificate] = None
    trace: List[TraceRecord] = field(default_factory=list,
                                     compare=False)

    @property
    def digest(self) -> str:
        return sha256(str(self.value).encode()).hexdigest()


@dataclass(frozen=True)
class Comparison:
    classic: EvalResult
    trunc: EvalResult
    # exact modulus of the difference of values, squared
    squared_difference: Fraction
