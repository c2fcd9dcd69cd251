from fractions import Fraction

import pytest

from holoprec.arithmetic import (Dyadic,
                                 DyadicComplex,
                                 GaussianInt,
                                 GaussianRational,
                                 Polynomial,
                                 bit_size,
                                 trunc_gaussian,
                                 trunc_scalar)
from holoprec.arithmetic.directed import (ceil_log2,
                                          floor_log2,
                                          modulus_lower,
                                          modulus_upper,
                                          power_upper,
                                          round_down,
                                          round_up,
                                          sqrt_lower,
                                          sqrt_upper)
from holoprec.arithmetic import dyadic
from holoprec.arithmetic.dyadic import (tolerance_exponent,
                                        to_decimal)
from holoprec.arithmetic.matrices import (Matrix,
                                          identity,
                                          inverse,
                                          multiply)
from holoprec.config import MAX_EXPONENT
from holoprec.errors import (ConfigurationError,
                             InvalidTolerance,
                             ParseError)


@pytest.mark.parametrize('value, expected',
                         [(GaussianRational(GaussianInt(3, 4), 2), 6),
                          (GaussianRational(GaussianInt(1, 1)), 1),
                          (GaussianRational(0), 1)])
def test_bit_size_examples(value: GaussianRational, expected: int) -> None:
    assert bit_size(value) == expected


def test_bit_size_of_real_products(real_big_integer: GaussianInt) -> None:
    other = real_big_integer + 1

    assert (bit_size(real_big_integer * other)
            <= bit_size(real_big_integer) + bit_size(other) + 2)


def test_bit_size_of_products(big_gaussian_integer: GaussianInt,
                              gaussian_integer: GaussianInt) -> None:
    product = big_gaussian_integer * gaussian_integer
    total = bit_size(big_gaussian_integer) + bit_size(gaussian_integer)

    assert bit_size(product) <= 2 * total


@pytest.mark.parametrize('value, tolerance, expected',
                         [(Fraction(5, 3), Fraction(1, 4), Fraction(3, 2)),
                          (Fraction(-5, 3), Fraction(1, 4), Fraction(-3, 2)),
                          (Fraction(0), Fraction(1, 2), Fraction(0))])
def test_trunc_scalar_examples(value: Fraction,
                               tolerance: Fraction,
                               expected: Fraction) -> None:
    result = trunc_scalar(value, tolerance)

    assert result == expected
    assert result.exponent == ceil_log2(1 / tolerance)


def test_trunc_scalar(rational: Fraction, tolerance: Fraction) -> None:
    result = trunc_scalar(rational, tolerance)

    assert abs(result.to_fraction() - rational) <= tolerance
    assert abs(result.to_fraction()) <= abs(rational)
    assert trunc_scalar(result.to_fraction(), tolerance) == result


@pytest.mark.parametrize('exponent', [1, 17, 64])
def test_trunc_scalar_on_dyadic_tolerances(rational: Fraction,
                                           exponent: int) -> None:
    value = rational / 2 ** 15
    tolerance = Fraction(1, 2 ** exponent)

    result = trunc_scalar(value, tolerance)

    assert abs(result.to_fraction() - value) <= tolerance
    assert result.exponent == exponent


def test_trunc_scalar_invalid_tolerance(rational: Fraction,
                                        invalid_tolerance: Fraction) -> None:
    with pytest.raises(InvalidTolerance):
        trunc_scalar(rational, invalid_tolerance)


def test_tolerance_exponent_cap(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(dyadic, 'MAX_EXPONENT', 16)

    assert tolerance_exponent(Fraction(1, 2 ** 16)) == 16
    with pytest.raises(ConfigurationError):
        tolerance_exponent(Fraction(1, 2 ** 17))


def test_dyadic_exponent_cap() -> None:
    with pytest.raises(ConfigurationError):
        Dyadic(1, MAX_EXPONENT + 1)


@pytest.mark.parametrize('value, tolerance, expected',
                         [(GaussianRational(GaussianInt(5, 5), 3),
                           Fraction(1, 4),
                           DyadicComplex(Dyadic(3, 1), Dyadic(3, 1))),
                          (GaussianRational(2), Fraction(1, 2),
                           DyadicComplex(Dyadic(2), Dyadic())),
                          (GaussianRational(GaussianInt(-1, -1), 3),
                           Fraction(1, 8),
                           DyadicComplex(Dyadic(-1, 2), Dyadic(-1, 2)))])
def test_trunc_gaussian_examples(value: GaussianRational,
                                 tolerance: Fraction,
                                 expected: DyadicComplex) -> None:
    assert trunc_gaussian(value, tolerance) == expected


def test_trunc_gaussian(gaussian_rational: GaussianRational,
                        tolerance: Fraction) -> None:
    result = trunc_gaussian(gaussian_rational, tolerance)

    assert abs(result.re.to_fraction() - gaussian_rational.re) <= tolerance
    assert abs(result.im.to_fraction() - gaussian_rational.im) <= tolerance


def test_dyadic_arithmetic(rational: Fraction, exponent: int) -> None:
    value = trunc_scalar(rational, Fraction(1, 2 ** (exponent + 1)))
    other = Dyadic(3, exponent)

    assert ((value + other).to_fraction()
            == value.to_fraction() + other.to_fraction())
    assert ((value * other).to_fraction()
            == value.to_fraction() * other.to_fraction())
    assert (value - value).to_fraction() == 0


def test_dyadic_negative_exponent() -> None:
    assert Dyadic(3, -2) == Dyadic(12)
    assert str(Dyadic(12)) == '12*2^-0'


def test_dyadic_complex_str() -> None:
    assert str(DyadicComplex(Dyadic(1, 1), Dyadic(-3, 2))) == '1*2^-1-3*2^-2*i'
    assert str(DyadicComplex(Dyadic(1, 1))) == '1*2^-1'


@pytest.mark.parametrize('value, digits, expected',
                         [(Fraction(34359738367, 2 ** 34), 8, '2.00000000'),
                          (Fraction(-1, 3), 4, '-0.3333'),
                          (Fraction(-2, 3), 4, '-0.6667'),
                          (Fraction(-1, 10 ** 6), 3, '0.000'),
                          (Fraction(7, 2), 0, '4'),
                          (Fraction(1, 8), 2, '0.13')])
def test_to_decimal(value: Fraction, digits: int, expected: str) -> None:
    assert to_decimal(value, digits) == expected


@pytest.mark.parametrize('string, expected',
                         [('1/2', GaussianRational(1, 2)),
                          ('-i', GaussianRational(GaussianInt(0, -1))),
                          ('3-2*i', GaussianRational(GaussianInt(3, -2))),
                          ('1/2+1/3*i', GaussianRational(GaussianInt(3, 2),
                                                         6)),
                          (' 2 i ', GaussianRational(GaussianInt(0, 2)))])
def test_gaussian_rational_parse(string: str,
                                 expected: GaussianRational) -> None:
    assert GaussianRational.parse(string) == expected


@pytest.mark.parametrize('string',
                         ['', '1/0', 'i+i', '1+2+i', '*i', 'x', '1/2/3'])
def test_gaussian_rational_parse_errors(string: str) -> None:
    with pytest.raises(ParseError) as error:
        GaussianRational.parse(string,
                               field='point')

    assert str(error.value).startswith('point: ')


def test_gaussian_rational_str(gaussian_rational: GaussianRational) -> None:
    assert GaussianRational.parse(str(gaussian_rational)) == gaussian_rational


def test_gaussian_rational_field(
        gaussian_rational: GaussianRational,
        other_gaussian_rational: GaussianRational,
        non_zero_gaussian_rational: GaussianRational) -> None:
    total = gaussian_rational + other_gaussian_rational
    product = gaussian_rational * non_zero_gaussian_rational

    assert total - other_gaussian_rational == gaussian_rational
    assert product / non_zero_gaussian_rational == gaussian_rational
    assert (gaussian_rational.normalize() == gaussian_rational
            and hash(gaussian_rational.normalize())
            == hash(gaussian_rational))
    assert ((gaussian_rational * gaussian_rational.conjugate()).re
            == gaussian_rational.norm())


def test_gaussian_integer_norm(gaussian_integer: GaussianInt,
                               non_zero_gaussian_integer: GaussianInt
                               ) -> None:
    assert ((gaussian_integer * non_zero_gaussian_integer).norm()
            == gaussian_integer.norm() * non_zero_gaussian_integer.norm())


def test_polynomial_evaluation(polynomial: Polynomial,
                               other_polynomial: Polynomial,
                               gaussian_integer: GaussianInt) -> None:
    product = polynomial * other_polynomial
    total = polynomial + other_polynomial

    assert (product(gaussian_integer)
            == polynomial(gaussian_integer)
            * other_polynomial(gaussian_integer))
    assert (total(gaussian_integer)
            == polynomial(gaussian_integer)
            + other_polynomial(gaussian_integer))
    assert (polynomial.shift(3)(gaussian_integer)
            == polynomial(gaussian_integer + 3))


@pytest.mark.parametrize('polynomial, expected',
                         [(Polynomial(2, 3, 1), 'n^2+3*n+2'),
                          (Polynomial(1, 1), 'n+1'),
                          (Polynomial(-1), '-1'),
                          (Polynomial(), '0'),
                          (Polynomial(0, GaussianInt(1, 1)), '(1+i)*n')])
def test_polynomial_to_string(polynomial: Polynomial, expected: str) -> None:
    assert polynomial.to_string('n') == expected


def test_directed_rounding(non_negative_rational: Fraction,
                           bits_count: int) -> None:
    upper = round_up(non_negative_rational, bits_count)
    lower = round_down(non_negative_rational, bits_count)

    assert lower <= non_negative_rational <= upper
    if non_negative_rational:
        assert upper - lower <= non_negative_rational / 2 ** (bits_count - 2)
        assert (2 ** floor_log2(non_negative_rational)
                <= non_negative_rational
                < 2 ** (floor_log2(non_negative_rational) + 1))


def test_square_roots(non_negative_rational: Fraction) -> None:
    upper = sqrt_upper(non_negative_rational)
    lower = sqrt_lower(non_negative_rational)

    assert lower * lower <= non_negative_rational <= upper * upper


def test_moduli(gaussian_rational: GaussianRational) -> None:
    upper = modulus_upper(gaussian_rational)
    lower = modulus_lower(gaussian_rational)

    assert lower ** 2 <= gaussian_rational.norm() <= upper ** 2


def test_power_upper(exponent: int) -> None:
    base = Fraction(2, 3)

    assert base ** exponent <= power_upper(base, exponent)
    assert power_upper(base, exponent) <= base ** exponent * Fraction(
            1 + 2 ** -50) ** (2 * exponent + 2)


def test_inverse(square_matrix: Matrix) -> None:
    try:
        result = inverse(square_matrix)
    except ZeroDivisionError:
        return

    assert multiply(square_matrix, result) == identity(
            len(square_matrix),
            entry_type=GaussianRational)
