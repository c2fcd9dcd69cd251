"""
Directed rounding of non-negative rationals.

Only the operations whose callers need a one-sided bound live here,
everything is exact integer arithmetic underneath.
"""
import math
from fractions import Fraction
from numbers import Rational

from .gaussian import (GaussianInt,
                       GaussianRational)


def ceil_lg(value: int) -> int:
    """Returns ceil(lg(value)) with ceil(lg(0)) = 0."""
    value = abs(value)
    return (value - 1).bit_length() if value else 0


def floor_log2(value: Rational) -> int:
    value = Fraction(value)
    if value <= 0:
        raise ValueError('Logarithm argument should be positive, '
                         'but found {value}.'.format(value=value))
    numerator, denominator = value.numerator, value.denominator
    result = numerator.bit_length() - denominator.bit_length()
    # 2 ** result <= value < 2 ** (result + 1)
    if result >= 0:
        if numerator < denominator << result:
            result -= 1
    elif numerator << -result < denominator:
        result -= 1
    return result


def ceil_log2(value: Rational) -> int:
    """Returns the least integer ``e`` such that ``2 ** e >= value``."""
    result = floor_log2(value)
    return result if Fraction(value) == _power_of_two(result) else result + 1


def _power_of_two(exponent: int) -> Fraction:
    return (Fraction(1 << exponent)
            if exponent >= 0
            else Fraction(1, 1 << -exponent))


def approximate_log2(value: Rational) -> float:
    value = Fraction(value)
    exponent = floor_log2(value)
    mantissa = value / _power_of_two(exponent)
    return exponent + math.log2(mantissa)


def round_up(value: Rational, bits: int) -> Fraction:
    """Returns dyadic upper bound of ``value`` with ``bits`` significant bits."""
    value = Fraction(value)
    if value < 0:
        return -round_down(-value, bits)
    elif not value:
        return value
    shift = bits - 1 - floor_log2(value)
    scaled = value * _power_of_two(shift)
    return Fraction(math.ceil(scaled)) / _power_of_two(shift)


def round_down(value: Rational, bits: int) -> Fraction:
    value = Fraction(value)
    if value < 0:
        return -round_up(-value, bits)
    elif not value:
        return value
    shift = bits - 1 - floor_log2(value)
    scaled = value * _power_of_two(shift)
    return Fraction(math.floor(scaled)) / _power_of_two(shift)


def _ceil_isqrt(value: int) -> int:
    root = math.isqrt(value)
    return root if root * root == value else root + 1


def _scaled_sqrt(value: Fraction, bits: int,
                 *,
                 upward: bool) -> Fraction:
    if value < 0:
        raise ValueError('Square root argument should be non-negative, '
                         'but found {value}.'.format(value=value))
    elif not value:
        return value
    numerator, denominator = value.numerator, value.denominator
    # sqrt(value) = sqrt(value * 4 ** shift) / 2 ** shift
    shift = bits - (numerator.bit_length() - denominator.bit_length()) // 2
    if shift >= 0:
        numerator <<= 2 * shift
    else:
        denominator <<= -2 * shift
    if upward:
        root = _ceil_isqrt(-(-numerator // denominator))
    else:
        root = math.isqrt(numerator // denominator)
    return Fraction(root) / _power_of_two(shift)


def sqrt_upper(value: Rational, bits: int = 64) -> Fraction:
    return _scaled_sqrt(Fraction(value), bits,
                        upward=True)


def sqrt_lower(value: Rational, bits: int = 64) -> Fraction:
    return _scaled_sqrt(Fraction(value), bits,
                        upward=False)


def modulus_upper(value: GaussianRational, bits: int = 64) -> Fraction:
    if isinstance(value, GaussianInt):
        if not value.im:
            return Fraction(abs(value.re))
        elif not value.re:
            return Fraction(abs(value.im))
        return sqrt_upper(value.norm(), bits)
    if not value.numerator.im:
        return abs(value.re)
    elif not value.numerator.re:
        return abs(value.im)
    return sqrt_upper(value.norm(), bits)


def modulus_lower(value: GaussianRational, bits: int = 64) -> Fraction:
    if isinstance(value, GaussianInt):
        if not value.im:
            return Fraction(abs(value.re))
        elif not value.re:
            return Fraction(abs(value.im))
        return sqrt_lower(value.norm(), bits)
    if not value.numerator.im:
        return abs(value.re)
    elif not value.numerator.re:
        return abs(value.im)
    return sqrt_lower(value.norm(), bits)


def taxicab_modulus(value: GaussianRational) -> Fraction:
    """Returns |re| + |im|, an upper bound of the modulus."""
    if isinstance(value, GaussianInt):
        return Fraction(abs(value.re) + abs(value.im))
    return Fraction(abs(value.numerator.re) + abs(value.numerator.im),
                    value.denominator)


def power_upper(base: Rational, exponent: int, bits: int = 64) -> Fraction:
    """Returns upper bound of ``base ** exponent`` for ``base >= 0``."""
    if exponent < 0:
        raise ValueError('Exponent should be non-negative, '
                         'but found {exponent}.'.format(exponent=exponent))
    result = Fraction(1)
    base = round_up(base, bits)
    while exponent:
        if exponent & 1:
            result = round_up(result * base, bits)
        exponent >>= 1
        if exponent:
            base = round_up(base * base, bits)
    return result
