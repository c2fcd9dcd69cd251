from dataclasses import dataclass
from fractions import Fraction
from typing import (Optional,
                    Tuple)

from holoprec.arithmetic.matrices import Matrix
from holoprec.types import JSONType


@dataclass(frozen=True)
class NormTransform:
    """
    Change of basis making ``zeta * C_inf`` contracting
    in the induced 1-norm.
    """
    matrix: Matrix
    inverse: Matrix
    # upper bound of the transformed 1-norm of ``zeta * C_inf``
    contraction: Fraction
    scale: Fraction
    hint_precision: int

    @property
    def size(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class TailCertificate:
    """
    Claims that for every ``n >= start``
    the transformed 1-norm of ``zeta * C(n)`` is at most ``ratio``
    and ``headroom * ratio ** (order - start) / (1 - ratio) <= tolerance``,
    hence the series tail from ``order`` on is below ``tolerance``.
    """
    order: int
    start: int
    ratio: Fraction
    headroom: Fraction
    tolerance: Fraction
    transform: Optional[Matrix] = None
    inverse_transform: Optional[Matrix] = None

    @property
    def is_trivial(self) -> bool:
        return not self.headroom

    def to_json(self) -> JSONType:
        return {'N': self.order,
                'n1': self.start,
                'q': str(self.ratio),
                'headroom': str(self.headroom),
                'epsilon': str(self.tolerance),
                'transform': _matrix_to_json(self.transform),
                'inverse_transform': _matrix_to_json(self.inverse_transform)}


def _matrix_to_json(matrix: Optional[Matrix]
                    ) -> Optional[Tuple[Tuple[str, ...], ...]]:
    if matrix is None:
        return None
    return tuple(tuple(str(entry.normalize()) for entry in row)
                 for row in matrix)
