import logging
from typing import (List,
                    Sequence)

from holoprec.arithmetic import (GaussianInt,
                                 GaussianRational,
                                 Polynomial)
from holoprec.arithmetic.matrices import Matrix
from holoprec.errors import (ArityError,
                             DegenerateOperator,
                             NotOrdinaryPoint,
                             SingularRecurrence)
from holoprec.models import (EvalPoint,
                             InitialVector,
                             Recurrence,
                             ThetaODE)

logger = logging.getLogger(__name__)


def stirling_numbers(order: int) -> List[List[int]]:
    """
    Returns signed Stirling numbers of the first kind ``s(k, j)``
    for ``0 <= j <= k <= order``.
    """
    result = [[1]]
    for k in range(order):
        previous = result[-1] + [0]
        row = [0] * (k + 2)
        for j in range(1, k + 2):
            row[j] = previous[j - 1] - k * previous[j]
        result.append(row)
    return result


def theta_from_dz(coefficients: Sequence[Polynomial]) -> ThetaODE:
    """
    Converts ``sum(c_k(z) * (d/dz) ** k)`` to theta form
    by multiplying with ``z ** r``.
    """
    coefficients = tuple(coefficients)
    order = len(coefficients) - 1
    if order < 1 or not coefficients[-1]:
        raise DegenerateOperator('Differential operator should have '
                                 'positive order and non-zero '
                                 'leading coefficient.')
    if not coefficients[-1].coefficient(0):
        raise NotOrdinaryPoint('0 is not an ordinary point: c_r(0) = 0')
    stirling = stirling_numbers(order)
    theta_coefficients = []
    for j in range(order + 1):
        # z ** k * (d/dz) ** k = theta * (theta - 1) ... (theta - k + 1)
        theta_coefficient = Polynomial()
        for k in range(j, order + 1):
            theta_coefficient += (coefficients[k]
                                  * Polynomial.monomial(order - k)
                                  * stirling[k][j])
        theta_coefficients.append(theta_coefficient)
    return ThetaODE(theta_coefficients)


def check_ordinary(ode: ThetaODE) -> None:
    order = ode.order
    if not ode.leading_coefficient.coefficient(0):
        raise NotOrdinaryPoint('0 is not an ordinary point: a_r(0) = 0')
    indicial = Polynomial(*[coefficient.coefficient(0)
                            for coefficient in ode.coefficients])
    for exponent in range(order):
        if indicial(exponent):
            raise NotOrdinaryPoint('0 is not an ordinary point: '
                                   'local exponent {exponent} is missing'
                                   .format(exponent=exponent))


def derive_recurrence(ode: ThetaODE) -> Recurrence:
    check_ordinary(ode)
    order, padded_degree = ode.order, ode.padded_degree
    coefficients = []
    for j in range(padded_degree + 1):
        shifted = Polynomial(order - j, 1)
        coefficient = Polynomial()
        for k, theta_coefficient in enumerate(ode.coefficients):
            term = theta_coefficient.coefficient(j)
            if term:
                coefficient += shifted ** k * term
        coefficients.append(coefficient)
    recurrence = Recurrence(coefficients,
                            order=order)
    logger.debug('Derived recurrence {recurrence}.'
                 .format(recurrence=recurrence))
    return recurrence


def _leading_value(recurrence: Recurrence, index: int
                   ) -> List[GaussianInt]:
    values = list(recurrence.values(index))
    if not values[0]:
        raise SingularRecurrence(index)
    return values


def step_matrix(recurrence: Recurrence, point: EvalPoint, index: int
                ) -> Matrix:
    """
    Returns ``B(n)`` mapping ``(y[n + r - s] * zeta ** n, ...,
    y[n + r - 1] * zeta ** n, S[n])`` to the same vector at ``n + 1``.
    """
    values = _leading_value(recurrence, index)
    leading = GaussianRational(values[0])
    padded_degree, order = recurrence.padded_degree, recurrence.order
    zeta = point.value
    zero, one = GaussianRational(0), GaussianRational(1)
    rows = []
    for row in range(padded_degree - 1):
        rows.append(tuple(zeta if column == row + 1 else zero
                          for column in range(padded_degree + 1)))
    rows.append(tuple(-zeta * values[padded_degree - column] / leading
                      for column in range(padded_degree)) + (zero,))
    rows.append(tuple(one
                      if column in (padded_degree - order, padded_degree)
                      else zero
                      for column in range(padded_degree + 1)))
    return tuple(rows)


def hat_step_matrix(recurrence: Recurrence, point: EvalPoint, index: int
                    ) -> Matrix:
    """
    Returns ``b_0(n) * den(zeta) * B(n)`` which has Gaussian integer entries.
    """
    values = _leading_value(recurrence, index)
    padded_degree, order = recurrence.padded_degree, recurrence.order
    numerator, denominator = point.numerator, point.denominator
    zero = GaussianInt()
    superdiagonal = numerator * values[0]
    rows = []
    for row in range(padded_degree - 1):
        rows.append(tuple(superdiagonal if column == row + 1 else zero
                          for column in range(padded_degree + 1)))
    rows.append(tuple(-(numerator * values[padded_degree - column])
                      for column in range(padded_degree)) + (zero,))
    corner = values[0] * denominator
    rows.append(tuple(corner
                      if column in (padded_degree - order, padded_degree)
                      else zero
                      for column in range(padded_degree + 1)))
    return tuple(rows)


def initial_vector(ode: ThetaODE,
                   initial_values: Sequence[GaussianRational]
                   ) -> InitialVector:
    """
    Returns ``(y[r - s], ..., y[r - 1], 0)``
    with ``y[k] = l_k / k!`` and zeros at negative indices.
    """
    order, padded_degree = ode.order, ode.padded_degree
    if len(initial_values) != order:
        raise ArityError('Expected {order} initial value(s), '
                         'but found {count}.'
                         .format(order=order,
                                 count=len(initial_values)))
    factorial = 1
    coefficients = []
    for index, value in enumerate(initial_values):
        if index:
            factorial *= index
        coefficients.append((GaussianRational(0) + value)
                            / factorial)
    padding = [GaussianRational(0)] * (padded_degree - order)
    return InitialVector(padding + coefficients + [GaussianRational(0)])
