"""
Matrix norms, truncation of matrices and bounds of chunk products.

Norms are taxicab column sums ``max_j sum_i (|re a_ij| + |im a_ij|)``,
an upper bound of the induced 1-norm which is still submultiplicative.
"""
import logging
from fractions import Fraction
from numbers import Rational
from typing import Union

from holoprec.arithmetic import (DyadicComplexMatrix,
                                 GaussianInt,
                                 GaussianRational)
from holoprec.arithmetic.directed import (ceil_log2,
                                          round_up,
                                          taxicab_modulus)
from holoprec.arithmetic.dyadic import (tolerance_exponent,
                                        truncate_quotient)
from holoprec.arithmetic.matrices import (Matrix,
                                          multiply)
from holoprec.errors import (CertificationError,
                             SingularRecurrence)
from holoprec.models import (EvalPoint,
                             ExactProduct,
                             NormTransform,
                             Recurrence)
from holoprec.services.frontend import (deviation,
                                        deviation_polynomials,
                                        limit_companion)

logger = logging.getLogger(__name__)

# significant bits of upward rounded norm bounds
BOUND_BITS = 32


def _entry_norm(entry: Union[Rational, GaussianInt, GaussianRational]
                ) -> Fraction:
    if isinstance(entry, (GaussianInt, GaussianRational)):
        return taxicab_modulus(entry)
    return abs(Fraction(entry))


def norm_1(matrix: Union[Matrix, DyadicComplexMatrix]) -> Fraction:
    if isinstance(matrix, DyadicComplexMatrix):
        return Fraction(max(sum(abs(entry.re) + abs(entry.im)
                                for entry in column)
                            for column in zip(*matrix.mantissas)),
                        1 << matrix.exponent)
    return max(sum((_entry_norm(entry) for entry in column), Fraction(0))
               for column in zip(*matrix))


def entry_exponent(tolerance: Rational, size: int) -> int:
    """
    Returns exponent of truncated entries
    with per-component tolerance ``tolerance / (2 * size)``.
    """
    # validates the tolerance itself, not only the scaled one
    tolerance_exponent(tolerance)
    return tolerance_exponent(Fraction(tolerance) / (2 * size))


def trunc_matrix(matrix: Matrix, tolerance: Rational
                 ) -> DyadicComplexMatrix:
    """Truncates every component so that the norm error is ``tolerance``."""
    exponent = entry_exponent(tolerance, len(matrix))
    mantissas = []
    for row in matrix:
        mantissas_row = []
        for entry in row:
            if not isinstance(entry, GaussianRational):
                entry = GaussianRational(0) + entry
            numerator, denominator = entry.numerator, entry.denominator
            mantissas_row.append(GaussianInt(
                    truncate_quotient(numerator.re, denominator, exponent),
                    truncate_quotient(numerator.im, denominator, exponent)))
        mantissas.append(tuple(mantissas_row))
    return DyadicComplexMatrix(tuple(mantissas), exponent)


def divide_and_truncate(product: ExactProduct, tolerance: Rational
                        ) -> DyadicComplexMatrix:
    """
    Returns ``trunc_matrix(reduce(product), tolerance)``
    without forming the exact quotients.
    """
    corner = product.corner
    if not corner:
        raise ZeroDivisionError('Product corner vanishes.')
    exponent = entry_exponent(tolerance, len(product.matrix))
    conjugate, norm = corner.conjugate(), corner.norm()
    mantissas = []
    for row in product.matrix:
        mantissas_row = []
        for entry in row:
            # entry / corner = entry * conj(corner) / |corner| ** 2
            scaled = entry * conjugate
            mantissas_row.append(GaussianInt(
                    truncate_quotient(scaled.re, norm, exponent),
                    truncate_quotient(scaled.im, norm, exponent)))
        mantissas.append(tuple(mantissas_row))
    return DyadicComplexMatrix(tuple(mantissas), exponent)


def multiply_and_truncate(left: DyadicComplexMatrix,
                          right: DyadicComplexMatrix,
                          tolerance: Rational) -> DyadicComplexMatrix:
    exponent = entry_exponent(tolerance, left.size)
    product = multiply(left.mantissas, right.mantissas)
    shift = left.exponent + right.exponent - exponent
    if shift <= 0:
        return DyadicComplexMatrix(
                tuple(tuple(GaussianInt(entry.re << -shift,
                                        entry.im << -shift)
                            for entry in row)
                      for row in product),
                exponent)
    return DyadicComplexMatrix(
            tuple(tuple(GaussianInt(_shift_toward_zero(entry.re, shift),
                                    _shift_toward_zero(entry.im, shift))
                        for entry in row)
                  for row in product),
            exponent)


def _shift_toward_zero(value: int, shift: int) -> int:
    return value >> shift if value >= 0 else -(-value >> shift)


class OneNorm:
    """Plain taxicab 1-norm."""
    condition = Fraction(1)

    def step_bound(self, recurrence: Recurrence, point: EvalPoint,
                   index: int) -> Fraction:
        """
        Returns ``1 + |zeta| + max(|zeta * b_k(n) / b_0(n)|)``
        bounding the norm of ``B(n)``.
        """
        values = recurrence.values(index)
        leading = values[0]
        if not leading:
            raise SingularRecurrence(index)
        conjugate = leading.conjugate()
        numerator = point.numerator
        ratio = max(taxicab_modulus(numerator * value * conjugate)
                    for value in values[1:])
        return (1 + taxicab_modulus(point.value)
                + ratio / (point.denominator * leading.norm()))

    def __repr__(self) -> str:
        return type(self).__qualname__ + '()'


class TransformedNorm:
    """
    Norm ``A -> |Pi^-1 * A * Pi|`` with ``Pi = diag(T, t)``
    for a transform ``T`` contracting ``zeta * C_inf``.
    """

    def __init__(self, recurrence: Recurrence, point: EvalPoint,
                 transform: NormTransform) -> None:
        matrix, inverse = transform.matrix, transform.inverse
        contraction = norm_1(multiply(multiply(inverse,
                                               limit_companion(recurrence,
                                                               point)),
                                      matrix))
        if contraction >= 1:
            raise CertificationError('Transform does not contract '
                                     'in the taxicab norm '
                                     '(bound {bound:.6g}).'
                                     .format(bound=float(contraction)))
        size, order = len(matrix), recurrence.order
        # norm of the row selecting y[n] * zeta ** n after the transform
        coupling = max(_entry_norm(entry)
                       for entry in matrix[size - order])
        self._contraction = contraction
        self._scale = round_up(2 * coupling / (1 - contraction), BOUND_BITS)
        self._coupling_bound = coupling / self._scale
        transform_norm, inverse_norm = norm_1(matrix), norm_1(inverse)
        self._spread = (taxicab_modulus(point.value) * transform_norm
                        * inverse_norm)
        self._deviations = deviation_polynomials(recurrence)
        self.condition = round_up(max(transform_norm, self._scale)
                                  * max(inverse_norm, 1 / self._scale),
                                  BOUND_BITS)
        logger.debug('Transformed norm with contraction {contraction:.6g} '
                     'and condition {condition:.6g}.'
                     .format(contraction=float(contraction),
                             condition=float(self.condition)))

    def step_bound(self, recurrence: Recurrence, point: EvalPoint,
                   index: int) -> Fraction:
        return max(Fraction(1),
                   self._contraction
                   + self._spread * deviation(recurrence, self._deviations,
                                              index)
                   + self._coupling_bound)

    def __repr__(self) -> str:
        return '{}(condition={})'.format(type(self).__qualname__,
                                         self.condition)


def bound_M(recurrence: Recurrence,
            point: EvalPoint,
            order: int,
            chunks: int,
            tolerance: Rational,
            *,
            norm: Union[OneNorm, TransformedNorm] = None) -> Fraction:
    """
    Returns ``M >= max(|P(chunk)|) + tolerance``
    over chunks ``[q * N // chunks, (q + 1) * N // chunks)``,
    by products of upward rounded step bounds.
    """
    if norm is None:
        norm = OneNorm()
    tolerance = Fraction(tolerance)
    bits = BOUND_BITS + ceil_log2(1 / tolerance).bit_length()
    result = Fraction(1)
    for index in range(chunks):
        start, stop = index * order // chunks, (index + 1) * order // chunks
        product = Fraction(1)
        for step in range(start, stop):
            product = round_up(product
                               * norm.step_bound(recurrence, point, step),
                               bits)
        result = max(result, product)
    return round_up(result + tolerance, bits)
