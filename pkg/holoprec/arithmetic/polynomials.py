from itertools import zip_longest
from typing import (Tuple,
                    Union)

from .gaussian import (GaussianInt,
                       GaussianRational)

Coefficient = Union[int, GaussianInt]


class Polynomial:
    """Univariate polynomial over Z[i], coefficients from lowest degree."""
    __slots__ = '_coefficients',

    def __new__(cls, *coefficients: Coefficient) -> 'Polynomial':
        coefficients = [coefficient
                        if isinstance(coefficient, GaussianInt)
                        else GaussianInt(coefficient)
                        for coefficient in coefficients]
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        self = super().__new__(cls)
        self._coefficients = tuple(coefficients)
        return self

    @classmethod
    def monomial(cls, degree: int,
                 coefficient: Coefficient = 1) -> 'Polynomial':
        return cls(*([0] * degree + [coefficient]))

    @property
    def coefficients(self) -> Tuple[GaussianInt, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree with -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def leading_coefficient(self) -> GaussianInt:
        return (self._coefficients[-1]
                if self._coefficients
                else GaussianInt())

    def coefficient(self, degree: int) -> GaussianInt:
        return (self._coefficients[degree]
                if 0 <= degree < len(self._coefficients)
                else GaussianInt())

    def shift(self, offset: int) -> 'Polynomial':
        """Returns the polynomial ``x -> self(x + offset)``."""
        result = Polynomial()
        for coefficient in reversed(self._coefficients):
            result = result * Polynomial(offset, 1) + Polynomial(coefficient)
        return result

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(*[left + right
                            for left, right in zip_longest(
                        self._coefficients, other._coefficients,
                        fillvalue=GaussianInt())])

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __call__(self, argument: Union[int, GaussianInt, GaussianRational]
                 ) -> Union[GaussianInt, GaussianRational]:
        result = GaussianInt()
        for coefficient in reversed(self._coefficients):
            result = result * argument + coefficient
        return result

    def __eq__(self, other: 'Polynomial') -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __mul__(self, other: Union[Coefficient, 'Polynomial']
                ) -> 'Polynomial':
        if isinstance(other, (int, GaussianInt)):
            return Polynomial(*[coefficient * other
                                for coefficient in self._coefficients])
        elif not isinstance(other, Polynomial):
            return NotImplemented
        if not self or not other:
            return Polynomial()
        result = [GaussianInt()] * (len(self._coefficients)
                                    + len(other._coefficients) - 1)
        for index, coefficient in enumerate(self._coefficients):
            if not coefficient:
                continue
            for other_index, other_coefficient in enumerate(
                    other._coefficients):
                result[index + other_index] += (coefficient
                                                * other_coefficient)
        return Polynomial(*result)

    __rmul__ = __mul__

    def __neg__(self) -> 'Polynomial':
        return Polynomial(*[-coefficient
                            for coefficient in self._coefficients])

    def __pow__(self, exponent: int) -> 'Polynomial':
        result = Polynomial(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        return '{}({})'.format(type(self).__qualname__,
                               ', '.join(map(repr, self._coefficients)))

    def __str__(self) -> str:
        return self.to_string()

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def to_string(self, variable: str = 'z') -> str:
        terms = []
        for degree, coefficient in reversed(list(enumerate(
                self._coefficients))):
            if not coefficient:
                continue
            terms.append(_term_to_str(coefficient, degree, variable))
        if not terms:
            return '0'
        result = terms[0]
        for term in terms[1:]:
            result += term if term.startswith('-') else '+' + term
        return result


def _term_to_str(coefficient: GaussianInt, degree: int, variable: str
                 ) -> str:
    power = ('' if not degree
             else variable if degree == 1
             else '{}^{}'.format(variable, degree))
    if not power:
        return str(coefficient)
    if coefficient == 1:
        return power
    elif coefficient == -1:
        return '-' + power
    coefficient_str = str(coefficient)
    if coefficient.re and coefficient.im:
        coefficient_str = '(' + coefficient_str + ')'
    return '{}*{}'.format(coefficient_str, power)

