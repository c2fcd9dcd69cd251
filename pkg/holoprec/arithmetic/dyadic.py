import math
from fractions import Fraction
from numbers import Rational
from typing import Union

from holoprec.config import MAX_EXPONENT
from holoprec.errors import (ConfigurationError,
                             InvalidTolerance)
from .directed import (ceil_lg,
                       ceil_log2)
from .gaussian import (GaussianInt,
                       GaussianRational)
from .matrices import (Matrix,
                       bits_count)


class Dyadic:
    """Exact ``mantissa * 2 ** -exponent`` with non-negative exponent."""
    __slots__ = '_mantissa', '_exponent'

    def __new__(cls, mantissa: int = 0, exponent: int = 0) -> 'Dyadic':
        if exponent < 0:
            mantissa, exponent = mantissa << -exponent, 0
        elif exponent > MAX_EXPONENT:
            raise ConfigurationError('Dyadic exponent {exponent} exceeds '
                                     'the cap 2^62.'
                                     .format(exponent=exponent))
        self = super().__new__(cls)
        self._mantissa, self._exponent = int(mantissa), int(exponent)
        return self

    @property
    def mantissa(self) -> int:
        return self._mantissa

    @property
    def exponent(self) -> int:
        return self._exponent

    def to_fraction(self) -> Fraction:
        return Fraction(self._mantissa, 1 << self._exponent)

    def __add__(self, other: 'Dyadic') -> 'Dyadic':
        if not isinstance(other, Dyadic):
            return NotImplemented
        exponent = max(self._exponent, other._exponent)
        return Dyadic((self._mantissa << (exponent - self._exponent))
                      + (other._mantissa << (exponent - other._exponent)),
                      exponent)

    def __bool__(self) -> bool:
        return bool(self._mantissa)

    def __eq__(self, other: Union[Rational, 'Dyadic']) -> bool:
        if isinstance(other, Dyadic):
            return self.to_fraction() == other.to_fraction()
        elif isinstance(other, Rational):
            return self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __mul__(self, other: 'Dyadic') -> 'Dyadic':
        if not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self._mantissa * other._mantissa,
                      self._exponent + other._exponent)

    def __neg__(self) -> 'Dyadic':
        return Dyadic(-self._mantissa, self._exponent)

    def __repr__(self) -> str:
        return '{}({!r}, {!r})'.format(type(self).__qualname__,
                                       self._mantissa, self._exponent)

    def __str__(self) -> str:
        return '{}*2^-{}'.format(self._mantissa, self._exponent)

    def __sub__(self, other: 'Dyadic') -> 'Dyadic':
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self + (-other)


class DyadicComplex:
    __slots__ = '_re', '_im'

    def __new__(cls, re: Dyadic, im: Dyadic = Dyadic()) -> 'DyadicComplex':
        self = super().__new__(cls)
        self._re, self._im = re, im
        return self

    @property
    def re(self) -> Dyadic:
        return self._re

    @property
    def im(self) -> Dyadic:
        return self._im

    def to_gaussian_rational(self) -> GaussianRational:
        return GaussianRational.from_components(self._re.to_fraction(),
                                                self._im.to_fraction())

    def __eq__(self, other: 'DyadicComplex') -> bool:
        if not isinstance(other, DyadicComplex):
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self) -> int:
        return hash((self._re, self._im))

    def __repr__(self) -> str:
        return '{}({!r}, {!r})'.format(type(self).__qualname__,
                                       self._re, self._im)

    def __str__(self) -> str:
        if not self._im:
            return str(self._re)
        elif self._im.mantissa < 0:
            return '{}-{}*i'.format(self._re, -self._im)
        return '{}+{}*i'.format(self._re, self._im)


def bit_size(value: Union[int, GaussianInt, GaussianRational]) -> int:
    """
    Returns ceil(lg(den)) + ceil(lg(|re|)) + ceil(lg(|im|)) + 1
    with ceil(lg(0)) = 0.
    """
    if isinstance(value, int):
        value = GaussianInt(value)
    if isinstance(value, GaussianInt):
        value = GaussianRational(value)
    return (ceil_lg(value.denominator) + ceil_lg(value.numerator.re)
            + ceil_lg(value.numerator.im) + 1)


def tolerance_exponent(tolerance: Rational) -> int:
    """Returns ceil(lg(1 / tolerance)) for tolerance in (0, 1)."""
    tolerance = Fraction(tolerance)
    if not 0 < tolerance < 1:
        raise InvalidTolerance('Tolerance should lie in (0, 1), '
                               'but found {tolerance}.'
                               .format(tolerance=tolerance))
    exponent = ceil_log2(1 / tolerance)
    if exponent > MAX_EXPONENT:
        raise ConfigurationError('Tolerance {tolerance} needs exponent '
                                 'above the cap 2^62, increase precision '
                                 'or use fewer chunks.'
                                 .format(tolerance=float(tolerance)))
    return exponent


def truncate_quotient(numerator: int, denominator: int, exponent: int
                      ) -> int:
    """
    Returns sgn(q) * floor(2 ** exponent * |q|) for q = numerator / denominator
    with positive denominator.
    """
    if numerator >= 0:
        return (numerator << exponent) // denominator
    return -((-numerator << exponent) // denominator)


def trunc_scalar(value: Rational, tolerance: Rational) -> Dyadic:
    exponent = tolerance_exponent(tolerance)
    value = Fraction(value)
    return Dyadic(truncate_quotient(value.numerator, value.denominator,
                                    exponent),
                  exponent)


def trunc_gaussian(value: GaussianRational, tolerance: Rational
                   ) -> DyadicComplex:
    exponent = tolerance_exponent(tolerance)
    numerator, denominator = value.numerator, value.denominator
    return DyadicComplex(
            Dyadic(truncate_quotient(numerator.re, denominator, exponent),
                   exponent),
            Dyadic(truncate_quotient(numerator.im, denominator, exponent),
                   exponent))


def to_decimal(value: Rational, digits: int) -> str:
    """Returns ``value`` rounded to ``digits`` fractional decimal digits."""
    value = Fraction(value)
    # half away from zero
    scaled = math.floor(abs(value) * 10 ** digits + Fraction(1, 2))
    sign = '-' if value < 0 and scaled else ''
    integral, fractional = divmod(scaled, 10 ** digits)
    if not digits:
        return '{}{}'.format(sign, integral)
    return '{}{}.{}'.format(sign, integral,
                            str(fractional).rjust(digits, '0'))


class DyadicComplexMatrix:
    """Square matrix of complex dyadics sharing a common exponent."""
    __slots__ = '_mantissas', '_exponent'

    def __new__(cls, mantissas: Matrix, exponent: int
                ) -> 'DyadicComplexMatrix':
        if exponent > MAX_EXPONENT:
            raise ConfigurationError('Dyadic exponent {exponent} exceeds '
                                     'the cap 2^62.'
                                     .format(exponent=exponent))
        self = super().__new__(cls)
        self._mantissas, self._exponent = mantissas, exponent
        return self

    @property
    def mantissas(self) -> Matrix:
        return self._mantissas

    @property
    def exponent(self) -> int:
        return self._exponent

    @property
    def size(self) -> int:
        return len(self._mantissas)

    @property
    def bits_count(self) -> int:
        return bits_count(self._mantissas)

    @property
    def max_entry_bit_length(self) -> int:
        return max(max(entry.re.bit_length(), entry.im.bit_length())
                   for row in self._mantissas
                   for entry in row)

    def entry(self, row: int, column: int) -> DyadicComplex:
        mantissa = self._mantissas[row][column]
        return DyadicComplex(Dyadic(mantissa.re, self._exponent),
                             Dyadic(mantissa.im, self._exponent))

    def to_rational(self) -> Matrix:
        denominator = 1 << self._exponent
        return tuple(tuple(GaussianRational(entry, denominator)
                           for entry in row)
                     for row in self._mantissas)

    def __eq__(self, other: 'DyadicComplexMatrix') -> bool:
        if not isinstance(other, DyadicComplexMatrix):
            return NotImplemented
        return self.to_rational() == other.to_rational()

    def __hash__(self) -> int:
        return hash(self.to_rational())

    def __repr__(self) -> str:
        return '{}({!r}, {!r})'.format(type(self).__qualname__,
                                       self._mantissas, self._exponent)
