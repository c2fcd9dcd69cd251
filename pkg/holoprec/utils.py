import json
import logging
import math
import os
import sys
from contextlib import contextmanager
from typing import (Any,
                    Dict,
                    Iterator,
                    List,
                    Sequence,
                    Tuple)

import yaml

from holoprec.arithmetic import (DyadicComplex,
                                 GaussianInt,
                                 GaussianRational,
                                 Polynomial)
from holoprec.arithmetic.dyadic import to_decimal
from holoprec.errors import ParseError
from holoprec.models import (EvalPoint,
                             Problem,
                             ThetaODE)
from holoprec.services.frontend import theta_from_dz
from holoprec.types import (JSONType,
                            SettingsType)

logger = logging.getLogger(__name__)

FORMS = ('theta', 'dz')


def load_settings(path: str) -> SettingsType:
    with open(path) as file:
        return yaml.safe_load(file) or {}


def load_problem(path: str) -> Problem:
    try:
        with open(path) as file:
            data = json.load(file)
    except OSError as error:
        raise OSError('cannot read ODE file "{path}": {reason}'
                      .format(path=path,
                              reason=error.strerror or error)) from error
    except json.JSONDecodeError as error:
        raise ParseError('invalid JSON: {error}'.format(error=error),
                         field='file')
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_problem(data,
                         name=name)


def parse_problem(data: Any,
                  *,
                  name: str = '') -> Problem:
    """Parses the ODE JSON schema into a problem in theta form."""
    if not isinstance(data, dict):
        raise ParseError('expected an object',
                         field='file')
    form = data.get('form', 'theta')
    if form not in FORMS:
        raise ParseError('expected one of {forms}, but found "{form}"'
                         .format(forms=', '.join(FORMS),
                                 form=form),
                         field='form')
    coefficients = parse_coefficients(_require(data, 'coeffs'))
    ode = (theta_from_dz(coefficients)
           if form == 'dz'
           else ThetaODE(coefficients))
    initial_values = _require(data, 'initial_values')
    if not isinstance(initial_values, list):
        raise ParseError('expected a list',
                         field='initial_values')
    return Problem(name=name,
                   ode=ode,
                   initial_values=tuple(
                           _parse_value(value,
                                        field='initial_values[{}]'
                                        .format(index))
                           for index, value in enumerate(initial_values)),
                   point=EvalPoint(_parse_value(_require(data, 'point'),
                                                field='point')))


def _require(data: Dict[str, Any], key: str) -> Any:
    try:
        return data[key]
    except KeyError:
        raise ParseError('missing',
                         field=key)


def _parse_value(value: Any,
                 *,
                 field: str) -> GaussianRational:
    if isinstance(value, int) and not isinstance(value, bool):
        return GaussianRational(value)
    elif not isinstance(value, str):
        raise ParseError('expected a string',
                         field=field)
    return GaussianRational.parse(value,
                                  field=field)


def parse_coefficients(raw: Any) -> List[Polynomial]:
    if not isinstance(raw, list):
        raise ParseError('expected a list of polynomials',
                         field='coeffs')
    result = []
    for index, polynomial in enumerate(raw):
        if not isinstance(polynomial, list):
            raise ParseError('expected a list of coefficients',
                             field='coeffs[{}]'.format(index))
        result.append(Polynomial(*[
            _parse_coefficient(coefficient,
                               field='coeffs[{}][{}]'.format(index, degree))
            for degree, coefficient in enumerate(polynomial)]))
    return result


def _parse_coefficient(raw: Any,
                       *,
                       field: str) -> GaussianInt:
    if isinstance(raw, (str, int)) and not isinstance(raw, bool):
        raw = [raw, '0']
    if not isinstance(raw, list) or len(raw) != 2:
        raise ParseError('expected a pair of integers',
                         field=field)
    try:
        re, im = (int(component) for component in raw)
    except (TypeError, ValueError):
        raise ParseError('expected integers, but found {raw}'
                         .format(raw=raw),
                         field=field)
    return GaussianInt(re, im)


def problem_to_json(problem: Problem) -> JSONType:
    return {'form': 'theta',
            'coeffs': [[[str(coefficient.re), str(coefficient.im)]
                        for coefficient in polynomial.coefficients]
                       for polynomial in problem.ode.coefficients],
            'initial_values': [str(value.normalize())
                               for value in problem.initial_values],
            'point': str(problem.point)}


@contextmanager
def unlimited_int_digits() -> Iterator[None]:
    """Lifts the interpreter limit on decimal conversion of integers."""
    get_limit = getattr(sys, 'get_int_max_str_digits', None)
    if get_limit is None:
        yield
        return
    limit = get_limit()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(limit)


def decimal_digits(precision: int) -> int:
    """
    Returns one less than the count of fractional decimal digits
    justified by ``precision`` bits.
    """
    digits = math.floor(precision * math.log10(2))
    power = 1 << precision
    while 10 ** (digits + 1) <= power:
        digits += 1
    while digits and 10 ** digits > power:
        digits -= 1
    return max(digits - 1, 0)


def format_decimal(value: DyadicComplex, precision: int) -> str:
    digits = decimal_digits(precision)
    with unlimited_int_digits():
        re = to_decimal(value.re.to_fraction(), digits)
        if not value.im:
            return re
        im = to_decimal(value.im.to_fraction(), digits)
    return ('{}{}*i' if im.startswith('-') else '{}+{}*i').format(re, im)


def format_dyadic(value: DyadicComplex) -> str:
    with unlimited_int_digits():
        return str(value)


def parse_precisions(string: str) -> Tuple[int, ...]:
    try:
        result = tuple(int(part) for part in string.split(',') if part)
    except ValueError:
        raise ParseError('expected comma separated integers, '
                         'but found "{string}"'.format(string=string),
                         field='p')
    if not result or min(result) < 1:
        raise ParseError('expected positive precisions',
                         field='p')
    return result


def parse_names(string: str, choices: Sequence[str],
                *,
                field: str) -> Tuple[str, ...]:
    result = tuple(part for part in string.split(',') if part)
    unknown = [name for name in result if name not in choices]
    if unknown or not result:
        raise ParseError('expected names from {choices}, '
                         'but found "{string}"'
                         .format(choices=', '.join(choices),
                                 string=string),
                         field=field)
    return result