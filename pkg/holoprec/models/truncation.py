from dataclasses import (dataclass,
                         field)
from fractions import Fraction
from typing import (Dict,
                    Tuple)

from holoprec.arithmetic import DyadicComplexMatrix
from holoprec.arithmetic.directed import (ceil_lg,
                                         ceil_log2)
from holoprec.config import WORKING_PRECISION_SLACK


@dataclass(frozen=True)
class TruncParams:
    """Parameters of a truncated product tree run."""
    precision: int
    order: int
    chunks: int
    norm_bound: Fraction
    # bound of the norm equivalence constant, 1 for the plain 1-norm
    condition: Fraction = Fraction(1)

    @property
    def tolerance(self) -> Fraction:
        return Fraction(1, 1 << self.precision)

    @property
    def working_precision_cap(self) -> int:
        return (self.precision + self.chunks * ceil_log2(self.norm_bound)
                + ceil_lg(self.chunks) + 3 * ceil_log2(self.condition)
                + WORKING_PRECISION_SLACK)

    def chunk_bounds(self, index: int) -> Tuple[int, int]:
        return (index * self.order // self.chunks,
                (index + 1) * self.order // self.chunks)


@dataclass(frozen=True)
class TraceRecord:
    """State of the truncated product after one chunk."""
    index: int
    start: int
    stop: int
    chunk_bits: int
    accumulator_bits: int
    ledger_peak: int
    accumulator: DyadicComplexMatrix = field(repr=False,
                                             compare=False)

    def to_json(self) -> Dict[str, int]:
        return {'q': self.index,
                'start': self.start,
                'stop': self.stop,
                'chunk_bits': self.chunk_bits,
                'accumulator_bits': self.accumulator_bits,
                'ledger_peak': self.ledger_peak}
