from dataclasses import (asdict,
                         dataclass)
from typing import (Any,
                    Dict,
                    Optional)

CSV_COLUMNS = ('problem', 'mode', 'p', 'N', 'delta', 'lgM', 'wall_ns',
               'peak_bits', 'digest')


@dataclass(frozen=True)
class BenchRecord:
    problem: str
    mode: str
    p: int
    N: int
    delta: Optional[int]
    lgM: Optional[float]
    wall_ns: int
    peak_bits: int
    digest: str

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class Scaling:
    exponent: float
    r_squared: float
