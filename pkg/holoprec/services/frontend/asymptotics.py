"""
Behaviour of the companion matrix ``C(n)`` as ``n`` goes to infinity.
"""
from fractions import Fraction
from typing import Tuple

from holoprec.arithmetic import (GaussianInt,
                                 GaussianRational,
                                 Polynomial)
from holoprec.arithmetic.directed import taxicab_modulus
from holoprec.arithmetic.matrices import Matrix
from holoprec.errors import SingularRecurrence
from holoprec.models import (EvalPoint,
                             Recurrence)


def leading_coefficients(recurrence: Recurrence) -> Tuple[GaussianInt, ...]:
    """Returns coefficients of ``n ** r`` in ``b_0, ..., b_s``."""
    return tuple(coefficient.coefficient(recurrence.order)
                 for coefficient in recurrence.coefficients)


def is_entire(recurrence: Recurrence) -> bool:
    """Checks whether the limit companion matrix is nilpotent."""
    return not any(leading_coefficients(recurrence)[1:])


def limit_companion(recurrence: Recurrence,
                    point: EvalPoint) -> Matrix:
    """Returns ``zeta * C_inf`` of size ``s``."""
    coefficients = leading_coefficients(recurrence)
    size = recurrence.padded_degree
    zeta = point.value
    zero = GaussianRational(0)
    leading = GaussianRational(coefficients[0])
    rows = [tuple(zeta if column == row + 1 else zero
                  for column in range(size))
            for row in range(size - 1)]
    rows.append(tuple(-zeta * coefficients[size - column] / leading
                      for column in range(size)))
    return tuple(rows)


def deviation_polynomials(recurrence: Recurrence
                          ) -> Tuple[Polynomial, ...]:
    """
    Returns ``lc_0 * b_j - lc_j * b_0`` of degree below ``r``,
    so that ``C(n) - C_inf`` has last row entries
    ``-d_(s - j)(n) / (lc_0 * b_0(n))``.
    """
    coefficients = leading_coefficients(recurrence)
    leading_polynomial = recurrence.coefficients[0]
    return tuple(coefficient * coefficients[0]
                 - leading_polynomial * leading
                 for coefficient, leading in zip(recurrence.coefficients,
                                                 coefficients))


def deviation(recurrence: Recurrence,
              deviations: Tuple[Polynomial, ...],
              index: int) -> Fraction:
    """
    Returns exact taxicab 1-norm of ``C(n) - C_inf`` at ``n = index``.
    """
    leading = leading_coefficients(recurrence)[0]
    value = recurrence.coefficients[0](index)
    if not value:
        raise SingularRecurrence(index)
    denominator = value * leading
    conjugate, norm = denominator.conjugate(), denominator.norm()
    return max((taxicab_modulus(polynomial(index) * conjugate)
                for polynomial in deviations[1:]),
               default=Fraction(0)) / norm
