from dataclasses import dataclass
from typing import Tuple

from holoprec.arithmetic import GaussianRational
from .ode import (EvalPoint,
                  ThetaODE)


@dataclass(frozen=True)
class Problem:
    name: str
    ode: ThetaODE
    initial_values: Tuple[GaussianRational, ...]
    point: EvalPoint
    description: str = ''
