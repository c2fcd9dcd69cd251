#!/usr/bin/env python3
import json
import logging
import os
import sys
from typing import (Any,
                    Optional)

import click

from holoprec.arithmetic.directed import approximate_log2
from holoprec.catalog import (CATALOG,
                              catalog_names,
                              get_problem)
from holoprec.config import (DEFAULT_BOUND_MODE,
                             DEFAULT_HINT_PRECISIONS,
                             DEFAULT_PRECISION,
                             DEFAULT_SETTINGS_PATH,
                             DEFAULT_THRESHOLD,
                             DEFAULT_WORKERS,
                             DEFAULT_BENCH_MODES,
                             DEFAULT_BENCH_PRECISIONS,
                             THRESHOLD_ENVIRONMENT_VARIABLE)
from holoprec.errors import (ConfigurationError,
                             HoloprecError)
from holoprec.models import (EvalRequest,
                             EvalResult,
                             EvalPoint,
                             Problem)
from holoprec.services import (benchmarks,
                               evaluation)
from holoprec.services.common import (BENCH_FORMATS,
                                      BOUND_MODES,
                                      FORMATS,
                                      MODES)
from holoprec.services.frontend import derive_recurrence
from holoprec.types import SettingsType
from holoprec.utils import (format_decimal,
                            format_dyadic,
                            load_problem,
                            load_settings,
                            parse_names,
                            parse_precisions,
                            problem_to_json,
                            unlimited_int_digits)

logger = logging.getLogger(__name__)

UNCERTIFIED_EXIT_CODE = 2


@click.group()
@click.option('--settings-path', '-p',
              default=DEFAULT_SETTINGS_PATH,
              type=click.Path(),
              help='Settings file path '
                   '(absolute or relative, '
                   'default "settings.yml").')
@click.option('--verbose', '-v',
              is_flag=True,
              help='Log debug messages.')
@click.pass_context
def main(ctx: click.Context,
         settings_path: str,
         verbose: bool) -> None:
    logging.basicConfig(format='%(filename)s %(funcName)s '
                               '%(levelname)s: %(message)s',
                        level=logging.DEBUG if verbose else logging.WARNING)
    if (settings_path == DEFAULT_SETTINGS_PATH
            and not os.path.exists(settings_path)):
        ctx.obj = {}
        return
    try:
        ctx.obj = load_settings(settings_path)
    except OSError as error:
        _fail(ctx, 'cannot read settings file "{path}": {reason}'
              .format(path=settings_path,
                      reason=error.strerror or error))


def _fail(ctx: click.Context, message: str) -> None:
    click.echo('error: {message}'.format(message=message),
               err=True)
    ctx.exit(1)


def resolve_threshold(settings: SettingsType,
                      threshold: Optional[int]) -> int:
    if threshold is not None:
        result = threshold
    elif THRESHOLD_ENVIRONMENT_VARIABLE in os.environ:
        raw = os.environ[THRESHOLD_ENVIRONMENT_VARIABLE]
        try:
            result = int(raw)
        except ValueError:
            raise ConfigurationError('{name} should be an integer, '
                                     'but found "{raw}".'
                                     .format(name=
                                             THRESHOLD_ENVIRONMENT_VARIABLE,
                                             raw=raw))
    else:
        result = settings.get('threshold', DEFAULT_THRESHOLD)
    if result < 1:
        raise ConfigurationError('Threshold should be positive, '
                                 'but found {threshold}.'
                                 .format(threshold=result))
    return result


def _setting(settings: SettingsType, name: str, value: Any,
             default: Any) -> Any:
    return value if value is not None else settings.get(name, default)


def _load_problem(catalog: Optional[str],
                  ode_path: Optional[str],
                  point: Optional[str]) -> Problem:
    if (catalog is None) is (ode_path is None):
        raise ConfigurationError('Exactly one of "--catalog" and "--ode" '
                                 'should be given.')
    problem = (get_problem(catalog)
               if catalog is not None
               else load_problem(ode_path))
    if point is not None:
        problem = Problem(name=problem.name,
                          ode=problem.ode,
                          initial_values=problem.initial_values,
                          point=EvalPoint.parse(point),
                          description=problem.description)
    return problem


problem_options = [
    click.option('--catalog', '-c',
                 type=click.Choice(sorted(CATALOG)),
                 default=None,
                 help='Catalog problem name.'),
    click.option('--ode', 'ode_path',
                 type=click.Path(),
                 default=None,
                 help='ODE JSON file path.'),
]


def with_problem_options(function):
    for option in reversed(problem_options):
        function = option(function)
    return function


@main.command(name='eval')
@with_problem_options
@click.option('--point',
              default=None,
              help='Evaluation point overriding the problem one, '
                   'e.g. "1/2+1/3*i".')
@click.option('--prec-bits',
              type=int,
              default=None,
              help='Target precision in bits.')
@click.option('--mode', '-m',
              type=click.Choice(MODES),
              default='trunc',
              help='Summation mode: '
                   '"classic" - exact binary splitting, '
                   '"trunc" - truncated binary splitting (default).')
@click.option('--bound-mode',
              type=click.Choice(BOUND_MODES),
              default=None,
              help='Truncation order choice: '
                   '"certified" - tail certificate (default), '
                   '"heuristic" - doubling without guarantee.')
@click.option('--threshold',
              type=int,
              default=None,
              help='Leaf size of product trees.')
@click.option('--delta',
              type=int,
              default=None,
              help='Chunks count override of truncated splitting.')
@click.option('--format', 'output_format',
              type=click.Choice(FORMATS),
              default='decimal',
              help='Output format.')
@click.option('--json', 'as_json',
              is_flag=True,
              help='Shortcut for "--format json".')
@click.option('--stats',
              is_flag=True,
              help='Print ledger statistics '
                   'and the per-chunk trace of truncated splitting.')
@click.option('--emit-certificate',
              is_flag=True,
              help='Print the tail certificate.')
@click.option('--strict',
              is_flag=True,
              help='Exit with status 2 on uncertified results.')
@click.option('--assume-in-disk',
              is_flag=True,
              help='Skip the disk of convergence check.')
@click.option('--refine-norm',
              is_flag=True,
              help='Bound truncated products in a transformed norm.')
@click.option('--workers',
              type=int,
              default=None,
              help='Threads computing sibling subtrees.')
@click.pass_context
def eval_(ctx: click.Context,
          catalog: Optional[str],
          ode_path: Optional[str],
          point: Optional[str],
          prec_bits: Optional[int],
          mode: str,
          bound_mode: Optional[str],
          threshold: Optional[int],
          delta: Optional[int],
          output_format: str,
          as_json: bool,
          stats: bool,
          emit_certificate: bool,
          strict: bool,
          assume_in_disk: bool,
          refine_norm: bool,
          workers: Optional[int]) -> None:
    settings = ctx.obj
    try:
        problem = _load_problem(catalog, ode_path, point)
        request = EvalRequest(
                ode=problem.ode,
                initial_values=problem.initial_values,
                point=problem.point,
                precision=_setting(settings, 'precision', prec_bits,
                                   DEFAULT_PRECISION),
                mode=mode,
                threshold=resolve_threshold(settings, threshold),
                chunks=delta,
                bound_mode=_setting(settings, 'bound_mode', bound_mode,
                                    DEFAULT_BOUND_MODE),
                assume_in_disk=assume_in_disk,
                refine_norm=refine_norm,
                workers=_setting(settings, 'workers', workers,
                                 DEFAULT_WORKERS),
                hint_precisions=tuple(settings.get(
                        'hint_precisions', DEFAULT_HINT_PRECISIONS)),
                trace=stats)
        result = evaluation.evaluate(request)
    except (HoloprecError, OSError) as error:
        _fail(ctx, str(error))
        return
    if as_json:
        output_format = 'json'
    if output_format == 'json':
        click.echo(json.dumps(result_to_json(result,
                                             stats=stats,
                                             certificate=emit_certificate),
                              indent=2))
    else:
        click.echo(result_to_text(result, output_format,
                                  stats=stats,
                                  certificate=emit_certificate))
    if strict and not result.certified:
        ctx.exit(UNCERTIFIED_EXIT_CODE)


def result_to_json(result: EvalResult,
                   *,
                   stats: bool,
                   certificate: bool) -> dict:
    with unlimited_int_digits():
        value = result.value
        output = {'value': {'re': str(value.re),
                            'im': str(value.im)},
                  'decimal': format_decimal(value, result.precision),
                  'error_bound': '2^-{}'.format(result.precision),
                  'mode': result.mode,
                  'N': result.order,
                  'delta': result.chunks,
                  'lgM': (round(approximate_log2(result.norm_bound), 6)
                          if result.norm_bound is not None
                          else None),
                  'certified': result.certified,
                  'assumed_in_disk': result.assumed_in_disk,
                  'digest': result.digest}
    if stats:
        output['ledger_peak'] = result.ledger_peak
        output['wall_ns'] = result.wall_time_ns
        output['trace'] = [record.to_json() for record in result.trace]
    if certificate:
        output['certificate'] = (result.certificate.to_json()
                                 if result.certificate is not None
                                 else None)
    return output


def result_to_text(result: EvalResult, output_format: str,
                   *,
                   stats: bool,
                   certificate: bool) -> str:
    value = (format_decimal(result.value, result.precision)
             if output_format == 'decimal'
             else format_dyadic(result.value))
    lines = [value,
             'error bound: 2^-{}'.format(result.precision),
             'N: {}'.format(result.order),
             'certified: {}'.format(str(result.certified).lower())]
    if result.assumed_in_disk:
        lines.append('assumed in disk: true')
    if stats:
        if result.chunks is not None:
            lines.append('delta: {}, lg M: {:.3f}'
                         .format(result.chunks,
                                 approximate_log2(result.norm_bound)))
        lines.append('ledger peak: {} bits'.format(result.ledger_peak))
        lines.append('wall time: {} ns'.format(result.wall_time_ns))
        lines.extend('chunk {q} [{start}, {stop}): chunk bits {chunk_bits}, '
                     'accumulator bits {accumulator_bits}, '
                     'ledger peak {ledger_peak}'
                     .format(**record.to_json())
                     for record in result.trace)
    if certificate and result.certificate is not None:
        lines.append('certificate: {}'
                     .format(json.dumps(result.certificate.to_json())))
    return '\n'.join(lines)


@main.command()
@with_problem_options
@click.pass_context
def recurrence(ctx: click.Context,
               catalog: Optional[str],
               ode_path: Optional[str]) -> None:
    """Prints coefficients of the Taylor coefficients recurrence."""
    try:
        problem = _load_problem(catalog, ode_path, None)
        click.echo(str(derive_recurrence(problem.ode)))
    except (HoloprecError, OSError) as error:
        _fail(ctx, str(error))


@main.command()
@click.option('--ode', 'ode_path',
              required=True,
              type=click.Path(),
              help='ODE JSON file path.')
@click.pass_context
def convert(ctx: click.Context, ode_path: str) -> None:
    """Prints the ODE JSON in theta form."""
    try:
        problem = load_problem(ode_path)
    except (HoloprecError, OSError) as error:
        _fail(ctx, str(error))
        return
    click.echo(json.dumps(problem_to_json(problem),
                          indent=2))


@main.command(name='catalog')
def catalog_() -> None:
    """Lists catalog problems."""
    for name in catalog_names():
        click.echo('{name}: {description}'
                   .format(name=name,
                           description=CATALOG[name].description))


@main.command()
@with_problem_options
@click.option('--p', 'precisions',
              default=None,
              help='Comma separated precisions in bits.')
@click.option('--modes',
              default=None,
              help='Comma separated modes.')
@click.option('--format', 'output_format',
              type=click.Choice(BENCH_FORMATS),
              default='csv',
              help='Records format.')
@click.option('--fit',
              is_flag=True,
              help='Append ledger peak scaling exponents.')
@click.option('--threshold',
              type=int,
              default=None,
              help='Leaf size of product trees.')
@click.option('--inject-mismatch',
              is_flag=True,
              hidden=True)
@click.pass_context
def bench(ctx: click.Context,
          catalog: Optional[str],
          ode_path: Optional[str],
          precisions: Optional[str],
          modes: Optional[str],
          output_format: str,
          fit: bool,
          threshold: Optional[int],
          inject_mismatch: bool) -> None:
    """Measures ledger peaks and wall times of requested modes."""
    settings = ctx.obj
    bench_settings = settings.get('bench', {})
    try:
        problem = _load_problem(catalog, ode_path, None)
        precisions_list = (parse_precisions(precisions)
                           if precisions is not None
                           else tuple(bench_settings.get(
                                   'precisions', DEFAULT_BENCH_PRECISIONS)))
        modes_list = (parse_names(modes, MODES,
                                  field='modes')
                      if modes is not None
                      else tuple(bench_settings.get('modes',
                                                    DEFAULT_BENCH_MODES)))
        records_iterator = benchmarks.iterate_series(
                problem, modes_list, precisions_list,
                threshold=resolve_threshold(settings, threshold),
                bound_mode=settings.get('bound_mode', DEFAULT_BOUND_MODE),
                hint_precisions=settings.get('hint_precisions',
                                             DEFAULT_HINT_PRECISIONS),
                inject_mismatch=inject_mismatch)
        records = []
        for record in records_iterator:
            if output_format == 'csv':
                benchmarks.write_csv([record], sys.stdout,
                                     header=not records)
                sys.stdout.flush()
            records.append(record)
        scalings = benchmarks.fit_scaling(records) if fit else None
    except (HoloprecError, OSError) as error:
        _fail(ctx, str(error))
        return
    if output_format == 'json':
        benchmarks.write_json(records, sys.stdout,
                              scalings=scalings)
    elif scalings is not None:
        for mode, scaling in scalings.items():
            click.echo('# fit {mode}: exponent={exponent:.4f}, '
                       'r_squared={r_squared:.4f}'
                       .format(mode=mode,
                               exponent=scaling.exponent,
                               r_squared=scaling.r_squared))


if __name__ == '__main__':
    main()
