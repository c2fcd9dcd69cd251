from dataclasses import dataclass

from holoprec.arithmetic import GaussianInt
from holoprec.arithmetic.matrices import (Matrix,
                                          bits_count)


@dataclass(frozen=True)
class ExactProduct:
    """
    Unreduced product ``B^(stop - 1) ... B^(start)`` of cleared step matrices.
    """
    matrix: Matrix
    start: int
    stop: int

    @property
    def corner(self) -> GaussianInt:
        return self.matrix[-1][-1]

    @property
    def bits_count(self) -> int:
        return bits_count(self.matrix)
