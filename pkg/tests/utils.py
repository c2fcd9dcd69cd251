import math
import warnings
from typing import (Any,
                    List,
                    Sequence)

from hypothesis.errors import NonInteractiveExampleWarning
from hypothesis.strategies import SearchStrategy

from holoprec.arithmetic import (GaussianRational,
                                 Polynomial)
from holoprec.arithmetic.matrices import (Matrix,
                                          identity,
                                          multiply)
from holoprec.models import (EvalPoint,
                             InitialVector,
                             Recurrence,
                             ThetaODE)
from holoprec.services.frontend import step_matrix


def example(strategy: SearchStrategy) -> Any:
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', NonInteractiveExampleWarning)
        return strategy.example()


def taylor_coefficients(recurrence: Recurrence,
                        initial_coefficients: Sequence[GaussianRational],
                        count: int) -> List[GaussianRational]:
    """Unrolls the recurrence in exact rationals."""
    order = recurrence.order
    result = list(initial_coefficients)
    while len(result) < count:
        index = len(result) - order
        values = recurrence.values(index)
        total = GaussianRational(0)
        for shift, value in enumerate(values[1:], 1):
            position = index + order - shift
            if value and position >= 0:
                total = total + value * result[position]
        result.append((-total / values[0]).normalize())
    return result[:count]


def partial_sum(recurrence: Recurrence,
                point: EvalPoint,
                vector: InitialVector,
                count: int) -> GaussianRational:
    """Returns ``sum(y[n] * zeta ** n for n in range(count))`` exactly."""
    order = recurrence.order
    initial = vector.state[len(vector.state) - order:]
    coefficients = taylor_coefficients(recurrence, initial, count)
    total, power = GaussianRational(0), GaussianRational(1)
    for coefficient in coefficients:
        total = total + coefficient * power
        power = (power * point.value).normalize()
    return total.normalize()


def prefix_product(recurrence: Recurrence,
                   point: EvalPoint,
                   start: int,
                   stop: int) -> Matrix:
    """Multiplies rational step matrices one by one."""
    result = identity(recurrence.padded_degree + 1,
                      entry_type=GaussianRational)
    for index in range(start, stop):
        result = tuple(tuple(entry.normalize() for entry in row)
                       for row in multiply(step_matrix(recurrence, point,
                                                       index),
                                           result))
    return result


def subtract(left: Matrix, right: Matrix) -> Matrix:
    return tuple(tuple(left_entry - right_entry
                       for left_entry, right_entry in zip(left_row,
                                                          right_row))
                 for left_row, right_row in zip(left, right))

def apply_theta_operator(ode: ThetaODE,
                         series: Sequence[GaussianRational]
                         ) -> List[GaussianRational]:
    """
    Returns coefficients of ``sum(a_k(z) * theta ** k) y``
    for the polynomial ``y = sum(series[n] * z ** n)``.
    """
    result = [GaussianRational(0)] * (len(series) + ode.degree + 1)
    for k, coefficient in enumerate(ode.coefficients):
        for degree, term in enumerate(coefficient.coefficients):
            if not term:
                continue
            for index, value in enumerate(series):
                if value:
                    result[index + degree] += value * term * index ** k
    return [value.normalize() for value in result]


def apply_dz_operator(coefficients: Sequence[Polynomial],
                      series: Sequence[GaussianRational]
                      ) -> List[GaussianRational]:
    """
    Returns coefficients of ``sum(c_k(z) * (d/dz) ** k) y``
    for the polynomial ``y = sum(series[n] * z ** n)``.
    """
    degree = max(coefficient.degree for coefficient in coefficients)
    result = [GaussianRational(0)] * (len(series) + max(degree, 0) + 1)
    for k, coefficient in enumerate(coefficients):
        for shift, term in enumerate(coefficient.coefficients):
            if not term:
                continue
            for index in range(k, len(series)):
                value = series[index]
                if value:
                    falling = math.perm(index, k)
                    result[index - k + shift] += value * term * falling
    return [value.normalize() for value in result]
