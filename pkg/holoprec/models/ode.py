from fractions import Fraction
from typing import (Sequence,
                    Tuple)

from holoprec.arithmetic import (GaussianInt,
                                 GaussianRational,
                                 Polynomial,
                                 bit_size)
from holoprec.errors import DegenerateOperator


class ThetaODE:
    """
    Operator ``sum(a_k(z) * theta ** k for k in range(r + 1))``
    with ``theta = z * d/dz``.
    """
    __slots__ = '_coefficients',

    def __init__(self, coefficients: Sequence[Polynomial]) -> None:
        coefficients = tuple(coefficients)
        if len(coefficients) < 2:
            raise DegenerateOperator('Operator order should be positive, '
                                     'but found {count} coefficient(s).'
                                     .format(count=len(coefficients)))
        if not coefficients[-1]:
            raise DegenerateOperator('Leading coefficient a_r '
                                     'should be non-zero.')
        self._coefficients = coefficients

    @property
    def coefficients(self) -> Tuple[Polynomial, ...]:
        return self._coefficients

    @property
    def order(self) -> int:
        return len(self._coefficients) - 1

    @property
    def degree(self) -> int:
        return max(coefficient.degree for coefficient in self._coefficients)

    @property
    def padded_degree(self) -> int:
        return max(self.degree, self.order)

    @property
    def height(self) -> int:
        return max(bit_size(entry)
                   for coefficient in self._coefficients
                   for entry in coefficient.coefficients)

    @property
    def leading_coefficient(self) -> Polynomial:
        return self._coefficients[-1]

    def __eq__(self, other: 'ThetaODE') -> bool:
        if not isinstance(other, ThetaODE):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        return '{}({!r})'.format(type(self).__qualname__,
                                 self._coefficients)


class Recurrence:
    """
    Relation ``sum(b_j(n) * y[n + r - j] for j in range(s + 1)) = 0``
    padded to ``s = max(deg, r)``.
    """
    __slots__ = '_coefficients', '_order'

    def __init__(self, coefficients: Sequence[Polynomial],
                 *,
                 order: int) -> None:
        self._coefficients = tuple(coefficients)
        self._order = order

    @property
    def coefficients(self) -> Tuple[Polynomial, ...]:
        return self._coefficients

    @property
    def order(self) -> int:
        return self._order

    @property
    def padded_degree(self) -> int:
        return len(self._coefficients) - 1

    @property
    def height(self) -> int:
        return max(bit_size(entry)
                   for coefficient in self._coefficients
                   for entry in coefficient.coefficients)

    def values(self, index: int) -> Tuple[GaussianInt, ...]:
        return tuple(coefficient(index)
                     for coefficient in self._coefficients)

    def __eq__(self, other: 'Recurrence') -> bool:
        if not isinstance(other, Recurrence):
            return NotImplemented
        return (self._order == other._order
                and self._coefficients == other._coefficients)

    def __hash__(self) -> int:
        return hash((self._coefficients, self._order))

    def __repr__(self) -> str:
        return '{}({!r}, order={!r})'.format(type(self).__qualname__,
                                             self._coefficients,
                                             self._order)

    def __str__(self) -> str:
        return ', '.join('b{index} = {polynomial}'
                         .format(index=index,
                                 polynomial=coefficient.to_string('n'))
                         for index, coefficient in enumerate(
                self._coefficients))


class EvalPoint:
    """Evaluation point as Gaussian integer numerator over integer."""
    __slots__ = '_value',

    def __init__(self, value: GaussianRational) -> None:
        self._value = value.normalize()

    @classmethod
    def parse(cls, string: str) -> 'EvalPoint':
        return cls(GaussianRational.parse(string,
                                          field='point'))

    @property
    def value(self) -> GaussianRational:
        return self._value

    @property
    def numerator(self) -> GaussianInt:
        return self._value.numerator

    @property
    def denominator(self) -> int:
        return self._value.denominator

    @property
    def height(self) -> int:
        return bit_size(self._value)

    def __eq__(self, other: 'EvalPoint') -> bool:
        if not isinstance(other, EvalPoint):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __repr__(self) -> str:
        return '{}({!r})'.format(type(self).__qualname__, self._value)

    def __str__(self) -> str:
        return str(self._value)


class InitialVector:
    """
    State ``(y[r - s], ..., y[r - 1], 0)`` of the partial sum recurrence.
    """
    __slots__ = '_entries',

    def __init__(self, entries: Sequence[GaussianRational]) -> None:
        self._entries = tuple(entries)

    @property
    def entries(self) -> Tuple[GaussianRational, ...]:
        return self._entries

    @property
    def state(self) -> Tuple[GaussianRational, ...]:
        """Entries without the partial sum coordinate."""
        return self._entries[:-1]

    @property
    def taxicab_norm(self) -> Fraction:
        """Returns sum of ``|re| + |im|`` over entries."""
        return sum((abs(entry.re) + abs(entry.im)
                    for entry in self._entries),
                   Fraction(0))

    def __bool__(self) -> bool:
        return any(self._entries)

    def __eq__(self, other: 'InitialVector') -> bool:
        if not isinstance(other, InitialVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return '{}({!r})'.format(type(self).__qualname__, self._entries)
