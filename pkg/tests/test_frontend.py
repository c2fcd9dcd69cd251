import math
from fractions import Fraction
from typing import List

import pytest

from holoprec.arithmetic import (GaussianInt,
                                 GaussianRational,
                                 Polynomial)
from holoprec.arithmetic.matrices import (apply,
                                          map_entries)
from holoprec.catalog import CATALOG
from holoprec.errors import (ArityError,
                             NotOrdinaryPoint,
                             OutOfDisk,
                             SingularRecurrence)
from holoprec.models import (EvalPoint,
                             Problem,
                             Recurrence,
                             ThetaODE)
from holoprec.services.frontend import (check_in_disk,
                                        derive_recurrence,
                                        hat_step_matrix,
                                        initial_vector,
                                        radius_lower_bound,
                                        refined_radius_lower_bound,
                                        step_matrix,
                                        stirling_numbers,
                                        theta_from_dz)
from tests.utils import (apply_dz_operator,
                         apply_theta_operator,
                         partial_sum,
                         prefix_product,
                         taylor_coefficients)


@pytest.mark.parametrize('coefficients, expected',
                         [([Polynomial(-1), Polynomial(1)],
                           [Polynomial(0, -1), Polynomial(1)]),
                          ([Polynomial(), Polynomial(0, 2),
                            Polynomial(1, 0, 1)],
                           [Polynomial(), Polynomial(-1, 0, 1),
                            Polynomial(1, 0, 1)]),
                          ([Polynomial(), Polynomial(1)],
                           [Polynomial(), Polynomial(1)])])
def test_theta_from_dz(coefficients, expected) -> None:
    assert theta_from_dz(coefficients) == ThetaODE(expected)


def test_theta_from_dz_not_ordinary() -> None:
    with pytest.raises(NotOrdinaryPoint) as error:
        theta_from_dz([Polynomial(1), Polynomial(0, 1)])

    assert '0 is not an ordinary point' in str(error.value)


@pytest.mark.parametrize('name, expected',
                         [('exp', [Polynomial(1, 1), Polynomial(-1)]),
                          ('arctan', [Polynomial(2, 3, 1), Polynomial(),
                                      Polynomial(0, 1, 1)]),
                          ('ln2', [Polynomial(2, 3, 1),
                                   Polynomial(-1, -2, -1),
                                   Polynomial()]),
                          ('geometric', [Polynomial(1, 1),
                                         Polynomial(-1, -1)])])
def test_derive_recurrence_examples(name: str, expected) -> None:
    problem = CATALOG[name]

    result = derive_recurrence(problem.ode)

    assert result.coefficients == tuple(expected)
    assert result.order == problem.ode.order


def test_recurrence_str() -> None:
    assert str(derive_recurrence(CATALOG['exp'].ode)) == 'b0 = n+1, b1 = -1'


@pytest.mark.parametrize('name, expected',
                         [('exp', [Fraction(1, math.factorial(index))
                                   for index in range(21)]),
                          ('arctan', [0, 1, 0, Fraction(-1, 3), 0,
                                      Fraction(1, 5), 0, Fraction(-1, 7)]),
                          ('ln2', [0] + [Fraction(1, index)
                                         for index in range(1, 20)])])
def test_taylor_coefficients(name: str, expected) -> None:
    problem = CATALOG[name]
    recurrence = derive_recurrence(problem.ode)
    vector = initial_vector(problem.ode, problem.initial_values)
    order = recurrence.order

    result = taylor_coefficients(recurrence,
                                 vector.state[len(vector.state) - order:],
                                 len(expected))

    assert result == [GaussianRational(0) + value for value in expected]


@pytest.mark.parametrize('ode',
                         [ThetaODE([Polynomial(1), Polynomial(0, 1)]),
                          ThetaODE([Polynomial(1), Polynomial(1)]),
                          ThetaODE([Polynomial(), Polynomial(1),
                                    Polynomial(1)])])
def test_derive_recurrence_not_ordinary(ode: ThetaODE) -> None:
    with pytest.raises(NotOrdinaryPoint) as error:
        derive_recurrence(ode)

    assert str(error.value).startswith('0 is not an ordinary point')


def test_step_matrix_examples() -> None:
    exp_recurrence = derive_recurrence(CATALOG['exp'].ode)
    geometric = CATALOG['geometric']
    geometric_recurrence = derive_recurrence(geometric.ode)
    one = EvalPoint(GaussianRational(1))

    for index in range(5):
        assert step_matrix(exp_recurrence, one, index) == (
            (GaussianRational(1, index + 1), GaussianRational(0)),
            (GaussianRational(1), GaussianRational(1)))
        assert step_matrix(geometric_recurrence, geometric.point,
                           index) == (
            (GaussianRational(1, 2), GaussianRational(0)),
            (GaussianRational(1), GaussianRational(1)))


def test_hat_step_matrix_examples() -> None:
    recurrence = derive_recurrence(CATALOG['exp'].ode)
    half = EvalPoint(GaussianRational(1, 2))

    for index in range(5):
        assert hat_step_matrix(recurrence, half, index) == (
            (GaussianInt(1), GaussianInt(0)),
            (GaussianInt(2 * (index + 1)), GaussianInt(2 * (index + 1))))
    assert hat_step_matrix(recurrence, EvalPoint(GaussianRational(1)),
                           0) == ((GaussianInt(1), GaussianInt(0)),
                                  (GaussianInt(1), GaussianInt(1)))


def test_hat_step_matrix(problem: Problem) -> None:
    recurrence = derive_recurrence(problem.ode)
    point = problem.point

    for index in range(6):
        hat = hat_step_matrix(recurrence, point, index)
        corner = GaussianRational(hat[-1][-1])

        assert hat[-1][-1] == (recurrence.coefficients[0](index)
                               * point.denominator)
        assert (map_entries(lambda entry: GaussianRational(entry) / corner,
                            hat)
                == step_matrix(recurrence, point, index))


def test_state_transitions(problem: Problem) -> None:
    recurrence = derive_recurrence(problem.ode)
    vector = initial_vector(problem.ode, problem.initial_values)

    for count in range(8):
        state = apply(prefix_product(recurrence, problem.point, 0, count),
                      vector.entries)

        assert state[-1] == partial_sum(recurrence, problem.point, vector,
                                        count)


def test_singular_recurrence() -> None:
    recurrence = Recurrence([Polynomial(-3, 1), Polynomial(1)],
                            order=1)
    point = EvalPoint(GaussianRational(1, 2))

    with pytest.raises(SingularRecurrence) as error:
        hat_step_matrix(recurrence, point, 3)

    assert error.value.index == 3
    assert 'n = 3' in str(error.value)


def test_initial_vector_examples() -> None:
    exp, arctan = CATALOG['exp'], CATALOG['arctan']

    assert (initial_vector(exp.ode, exp.initial_values).entries
            == (GaussianRational(1), GaussianRational(0)))
    assert (initial_vector(arctan.ode, arctan.initial_values).entries
            == (GaussianRational(0), GaussianRational(1),
                GaussianRational(0)))


def test_initial_vector(problem: Problem) -> None:
    ode = problem.ode
    zeros = (GaussianRational(0),) * ode.order

    result = initial_vector(ode, zeros)

    assert len(result.entries) == ode.padded_degree + 1
    assert not result
    with pytest.raises(ArityError):
        initial_vector(ode, zeros + (GaussianRational(1),))


@pytest.mark.parametrize('leading, expected',
                         [(Polynomial(1), math.inf),
                          (Polynomial(1, 0, 1), Fraction(1, 2)),
                          (Polynomial(2, -1), Fraction(2, 3))])
def test_radius_lower_bound(leading: Polynomial, expected) -> None:
    ode = ThetaODE([Polynomial(), leading])

    assert radius_lower_bound(ode) == expected


@pytest.mark.parametrize('leading, root_modulus',
                         [(Polynomial(1, 0, 1), 1),
                          (Polynomial(2, -1), 2),
                          (Polynomial(1, -1), 1)])
def test_refined_radius_lower_bound(leading: Polynomial,
                                    root_modulus: int) -> None:
    ode = ThetaODE([Polynomial(), leading])

    result = refined_radius_lower_bound(ode)

    assert radius_lower_bound(ode) <= result <= root_modulus
    assert result > root_modulus * Fraction(99, 100)


def test_check_in_disk() -> None:
    ln2 = CATALOG['ln2']

    assert check_in_disk(ln2.ode, ln2.point) <= 1
    with pytest.raises(OutOfDisk) as error:
        check_in_disk(ln2.ode, EvalPoint(GaussianRational(1)))

    assert '--assume-in-disk' in str(error.value)


def test_check_in_disk_random(problem: Problem) -> None:
    bound = check_in_disk(problem.ode, problem.point)

    assert bound == math.inf or problem.point.value.norm() < bound ** 2


def test_derive_recurrence(theta_ode: ThetaODE) -> None:
    result = derive_recurrence(theta_ode)

    assert result.order == theta_ode.order
    assert result.padded_degree == theta_ode.padded_degree
    assert result.coefficients[0].degree == theta_ode.order
    assert all(coefficient.degree <= theta_ode.order
               for coefficient in result.coefficients)
    assert all(result.coefficients[0](index) for index in range(32))


def test_series_substitution(problem: Problem) -> None:
    ode = problem.ode
    recurrence = derive_recurrence(ode)
    vector = initial_vector(ode, problem.initial_values)
    order, count = ode.order, 16
    coefficients = taylor_coefficients(
            recurrence, vector.state[len(vector.state) - order:], count)

    result = apply_theta_operator(ode, coefficients)

    # lower coefficients are fixed by the initial values
    assert not any(result[order:count])


def test_theta_from_dz_series(dz_operator: List[Polynomial],
                              series: List[GaussianRational]) -> None:
    order = len(dz_operator) - 1

    result = apply_theta_operator(theta_from_dz(dz_operator), series)

    expected = ([GaussianRational(0)] * order
                + apply_dz_operator(dz_operator, series))
    size = max(len(result), len(expected))
    assert (result + [GaussianRational(0)] * (size - len(result))
            == expected + [GaussianRational(0)] * (size - len(expected)))


def test_stirling_numbers() -> None:
    assert stirling_numbers(3) == [[1], [0, 1], [0, -1, 1], [0, 2, -3, 1]]
