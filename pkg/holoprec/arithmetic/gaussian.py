import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import (Tuple,
                    Union)

from holoprec.errors import ParseError


class GaussianInt:
    """Exact element of Z[i]."""
    __slots__ = '_re', '_im'

    def __new__(cls, re: int = 0, im: int = 0) -> 'GaussianInt':
        self = super().__new__(cls)
        self._re, self._im = int(re), int(im)
        return self

    @property
    def re(self) -> int:
        return self._re

    @property
    def im(self) -> int:
        return self._im

    @property
    def bit_length(self) -> int:
        return self._re.bit_length() + self._im.bit_length()

    def conjugate(self) -> 'GaussianInt':
        return GaussianInt(self._re, -self._im)

    def norm(self) -> int:
        return self._re * self._re + self._im * self._im

    def __add__(self, other: Union[int, 'GaussianInt']) -> 'GaussianInt':
        if isinstance(other, GaussianInt):
            return GaussianInt(self._re + other._re, self._im + other._im)
        elif isinstance(other, int):
            return GaussianInt(self._re + other, self._im)
        return NotImplemented

    __radd__ = __add__

    def __bool__(self) -> bool:
        return bool(self._re or self._im)

    def __eq__(self, other: Union[int, 'GaussianInt']) -> bool:
        if isinstance(other, GaussianInt):
            return self._re == other._re and self._im == other._im
        elif isinstance(other, int):
            return self._re == other and not self._im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._re, self._im))

    def __mul__(self, other: Union[int, 'GaussianInt']) -> 'GaussianInt':
        if isinstance(other, GaussianInt):
            if not other._im:
                return GaussianInt(self._re * other._re,
                                   self._im * other._re)
            elif not self._im:
                return GaussianInt(self._re * other._re,
                                   self._re * other._im)
            return GaussianInt(self._re * other._re - self._im * other._im,
                               self._re * other._im + self._im * other._re)
        elif isinstance(other, int):
            return GaussianInt(self._re * other, self._im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> 'GaussianInt':
        return GaussianInt(-self._re, -self._im)

    def __pos__(self) -> 'GaussianInt':
        return self

    def __repr__(self) -> str:
        return '{}({!r}, {!r})'.format(type(self).__qualname__,
                                       self._re, self._im)

    def __rsub__(self, other: int) -> 'GaussianInt':
        if isinstance(other, int):
            return GaussianInt(other - self._re, -self._im)
        return NotImplemented

    def __str__(self) -> str:
        return _components_to_str(Fraction(self._re), Fraction(self._im))

    def __sub__(self, other: Union[int, 'GaussianInt']) -> 'GaussianInt':
        if isinstance(other, GaussianInt):
            return GaussianInt(self._re - other._re, self._im - other._im)
        elif isinstance(other, int):
            return GaussianInt(self._re - other, self._im)
        return NotImplemented


GaussianRationalOperand = Union[int, Rational, GaussianInt,
                                'GaussianRational']


class GaussianRational:
    """
    Exact element of Q(i) as a Gaussian integer numerator
    over a positive integer denominator.

    Arithmetic does not cancel common divisors,
    ``normalize`` does.
    """
    __slots__ = '_numerator', '_denominator'

    def __new__(cls,
                numerator: Union[int, GaussianInt] = 0,
                denominator: int = 1) -> 'GaussianRational':
        if not denominator:
            raise ZeroDivisionError('Denominator should be non-zero.')
        if isinstance(numerator, int):
            numerator = GaussianInt(numerator)
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        self = super().__new__(cls)
        self._numerator, self._denominator = numerator, denominator
        return self

    @classmethod
    def from_components(cls,
                        re: Rational,
                        im: Rational = 0) -> 'GaussianRational':
        re, im = Fraction(re), Fraction(im)
        denominator = (re.denominator * im.denominator
                       // gcd(re.denominator, im.denominator))
        return cls(GaussianInt(re.numerator
                               * (denominator // re.denominator),
                               im.numerator
                               * (denominator // im.denominator)),
                   denominator)

    @classmethod
    def parse(cls, string: str,
              *,
              field: str = 'value') -> 'GaussianRational':
        re, im = parse_components(string,
                                  field=field)
        return cls.from_components(re, im)

    @property
    def numerator(self) -> GaussianInt:
        return self._numerator

    @property
    def denominator(self) -> int:
        return self._denominator

    @property
    def re(self) -> Fraction:
        return Fraction(self._numerator.re, self._denominator)

    @property
    def im(self) -> Fraction:
        return Fraction(self._numerator.im, self._denominator)

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational(self._numerator.conjugate(),
                                self._denominator)

    def norm(self) -> Fraction:
        return Fraction(self._numerator.norm(), self._denominator ** 2)

    def normalize(self) -> 'GaussianRational':
        divisor = gcd(gcd(self._numerator.re, self._numerator.im),
                      self._denominator)
        if divisor == 1:
            return self
        return GaussianRational(
                GaussianInt(self._numerator.re // divisor,
                            self._numerator.im // divisor),
                self._denominator // divisor)

    def __add__(self, other: GaussianRationalOperand
                ) -> 'GaussianRational':
        other = _to_gaussian_rational(other)
        if other is NotImplemented:
            return other
        if self._denominator == other._denominator:
            return GaussianRational(self._numerator + other._numerator,
                                    self._denominator)
        return GaussianRational(
                self._numerator * other._denominator
                + other._numerator * self._denominator,
                self._denominator * other._denominator)

    __radd__ = __add__

    def __bool__(self) -> bool:
        return bool(self._numerator)

    def __eq__(self, other: GaussianRationalOperand) -> bool:
        other = _to_gaussian_rational(other)
        if other is NotImplemented:
            return other
        return (self._numerator * other._denominator
                == other._numerator * self._denominator)

    def __hash__(self) -> int:
        normalized = self.normalize()
        if not normalized._numerator.im:
            return hash(Fraction(normalized._numerator.re,
                                 normalized._denominator))
        return hash((normalized._numerator, normalized._denominator))

    def __mul__(self, other: GaussianRationalOperand
                ) -> 'GaussianRational':
        other = _to_gaussian_rational(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._numerator * other._numerator,
                                self._denominator * other._denominator)

    __rmul__ = __mul__

    def __neg__(self) -> 'GaussianRational':
        return GaussianRational(-self._numerator, self._denominator)

    def __pos__(self) -> 'GaussianRational':
        return self

    def __repr__(self) -> str:
        return '{}({!r}, {!r})'.format(type(self).__qualname__,
                                       self._numerator, self._denominator)

    def __rsub__(self, other: GaussianRationalOperand
                 ) -> 'GaussianRational':
        return -self + other

    def __rtruediv__(self, other: GaussianRationalOperand
                     ) -> 'GaussianRational':
        other = _to_gaussian_rational(other)
        if other is NotImplemented:
            return other
        return other / self

    def __str__(self) -> str:
        return _components_to_str(self.re, self.im)

    def __sub__(self, other: GaussianRationalOperand
                ) -> 'GaussianRational':
        other = _to_gaussian_rational(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __truediv__(self, other: GaussianRationalOperand
                    ) -> 'GaussianRational':
        other = _to_gaussian_rational(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError('Division by zero.')
        # (x / d) / (y / e) = x * conj(y) * e / (d * |y| ** 2)
        return GaussianRational(
                self._numerator * other._numerator.conjugate()
                * other._denominator,
                self._denominator * other._numerator.norm())


def _to_gaussian_rational(value: GaussianRationalOperand
                          ) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    elif isinstance(value, (int, GaussianInt)):
        return GaussianRational(value)
    elif isinstance(value, Rational):
        return GaussianRational(value.numerator, value.denominator)
    return NotImplemented


_TERM_PATTERN = re.compile(r'(?P<coefficient>\d+(?:/\d+)?)?'
                           r'(?P<unit>\*?i)?')


def parse_components(string: str,
                     *,
                     field: str = 'value') -> Tuple[Fraction, Fraction]:
    """
    Parses strings like ``"a/b+c/d*i"``
    with every part optional, e.g. ``"1/2"``, ``"-i"``, ``"3-2*i"``.
    """
    text = ''.join(string.split())
    if not text:
        raise ParseError('empty Gaussian rational',
                         field=field)
    terms = re.findall(r'[+-]?[^+-]+|[+-]$', text)
    if not terms or ''.join(terms) != text or len(terms) > 2:
        raise ParseError('invalid Gaussian rational "{string}"'
                         .format(string=string),
                         field=field)
    re_part = im_part = None
    for term in terms:
        sign = -1 if term.startswith('-') else 1
        body = term.lstrip('+-')
        match = _TERM_PATTERN.fullmatch(body)
        if not body or match is None:
            raise ParseError('invalid Gaussian rational "{string}"'
                             .format(string=string),
                             field=field)
        coefficient = match.group('coefficient')
        is_imaginary = match.group('unit') is not None
        if coefficient is None and not is_imaginary:
            raise ParseError('invalid Gaussian rational "{string}"'
                             .format(string=string),
                             field=field)
        if match.group('unit') == '*i' and coefficient is None:
            raise ParseError('dangling "*" in "{string}"'
                             .format(string=string),
                             field=field)
        try:
            value = sign * (Fraction(coefficient)
                            if coefficient is not None
                            else Fraction(1))
        except ZeroDivisionError:
            raise ParseError('zero denominator in "{string}"'
                             .format(string=string),
                             field=field)
        if is_imaginary:
            if im_part is not None:
                raise ParseError('repeated imaginary part in "{string}"'
                                 .format(string=string),
                                 field=field)
            im_part = value
        else:
            if re_part is not None:
                raise ParseError('repeated real part in "{string}"'
                                 .format(string=string),
                                 field=field)
            re_part = value
    return (re_part if re_part is not None else Fraction(0),
            im_part if im_part is not None else Fraction(0))


def _components_to_str(re: Fraction, im: Fraction) -> str:
    if not im:
        return str(re)
    if im == 1:
        im_str = 'i'
    elif im == -1:
        im_str = '-i'
    else:
        im_str = '{}*i'.format(im)
    if not re:
        return im_str
    return '{}{}{}'.format(re, '' if im < 0 else '+', im_str)
