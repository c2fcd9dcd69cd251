import logging
import time
from dataclasses import replace
from fractions import Fraction
from typing import (List,
                    Optional,
                    Tuple,
                    Union)

from holoprec.arithmetic import (Dyadic,
                                 GaussianRational,
                                 trunc_gaussian)
from holoprec.arithmetic.directed import ceil_log2
from holoprec.errors import (CertificationError,
                             ConfigurationError,
                             CorrectnessRegression)
from holoprec.models import (Comparison,
                             EvalRequest,
                             EvalResult,
                             InitialVector,
                             Recurrence,
                             TailCertificate,
                             TraceRecord)
from holoprec.services.bounds import (heuristic_order,
                                      opt_norm_transform,
                                      truncation_order)
from holoprec.services.common import (BOUND_MODES,
                                      MODES)
from holoprec.services.frontend import (check_in_disk,
                                        derive_recurrence,
                                        initial_vector)
from holoprec.services.product_tree import (bin_split,
                                            instrumented,
                                            partial_sum)
from holoprec.services.truncation import (OneNorm,
                                          TransformedNorm,
                                          run,
                                          trunc_params)

logger = logging.getLogger(__name__)


def evaluate(request: EvalRequest) -> EvalResult:
    """
    Returns value within ``2 ** -p`` of the solution at the point
    when certified.

    The budget splits into quarters:
    the series tail, the truncated matrix product
    and the final truncation of each component.
    """
    _validate(request)
    ode, point, precision = request.ode, request.point, request.precision
    recurrence = derive_recurrence(ode)
    vector = initial_vector(ode, request.initial_values)
    if not request.assume_in_disk:
        check_in_disk(ode, point)
    start_time = time.perf_counter_ns()
    tolerance = Fraction(1, 1 << (precision + 2))
    order, certificate = _truncation_order(request, recurrence, vector,
                                           tolerance)
    trace = []  # type: List[TraceRecord]
    chunks = norm_bound = None
    with instrumented() as ledger:
        if request.mode == 'classic':
            product = bin_split(recurrence, point, 0, order,
                                threshold=request.threshold,
                                workers=request.workers)
            total = partial_sum(product, vector)
        else:
            total, chunks, norm_bound = _trunc_sum(
                    request, recurrence, vector, order,
                    trace=trace if request.trace else None)
    value = trunc_gaussian(total, tolerance)
    wall_time_ns = time.perf_counter_ns() - start_time
    certified = certificate is not None
    logger.info('Evaluated in {mode} mode with N = {order}, '
                'certified: {certified}.'
                .format(mode=request.mode,
                        order=order,
                        certified=str(certified).lower()))
    return EvalResult(mode=request.mode,
                      precision=precision,
                      value=value,
                      error_bound=Dyadic(1, precision),
                      order=order,
                      certified=certified,
                      assumed_in_disk=request.assume_in_disk,
                      ledger_current=ledger.current,
                      ledger_peak=ledger.peak,
                      wall_time_ns=wall_time_ns,
                      chunks=chunks,
                      norm_bound=norm_bound,
                      certificate=certificate,
                      trace=trace)


def _validate(request: EvalRequest) -> None:
    if request.precision < 1:
        raise ConfigurationError('Precision should be positive, '
                                 'but found {precision}.'
                                 .format(precision=request.precision))
    if request.mode not in MODES:
        raise ConfigurationError('Unknown mode "{mode}".'
                                 .format(mode=request.mode))
    if request.bound_mode not in BOUND_MODES:
        raise ConfigurationError('Unknown bound mode "{mode}".'
                                 .format(mode=request.bound_mode))


def _truncation_order(request: EvalRequest,
                      recurrence: Recurrence,
                      vector: InitialVector,
                      tolerance: Fraction
                      ) -> Tuple[int, Optional[TailCertificate]]:
    if request.bound_mode == 'certified':
        try:
            certificate = truncation_order(
                    recurrence, request.point, vector, tolerance,
                    hint_precisions=request.hint_precisions,
                    threshold=request.threshold)
        except CertificationError as error:
            logger.warning('Falling back to heuristic truncation order: '
                           '{error}'.format(error=error))
        else:
            return certificate.order, certificate
    return heuristic_order(recurrence, request.point, vector, tolerance,
                           threshold=request.threshold), None


def _trunc_sum(request: EvalRequest,
               recurrence: Recurrence,
               vector: InitialVector,
               order: int,
               *,
               trace: Optional[List[TraceRecord]] = None
               ) -> Tuple[GaussianRational, int, Fraction]:
    # |P~ - P| * |v| stays below the quarter of the budget
    precision = (request.precision + 2
                 + ceil_log2(max(Fraction(1), vector.taxicab_norm)))
    norm = (_refined_norm(recurrence, request)
            if request.refine_norm
            else OneNorm())
    params = trunc_params(recurrence, request.point, order, precision,
                          chunks=request.chunks,
                          norm=norm)
    matrix = run(recurrence, request.point, params,
                 threshold=request.threshold,
                 workers=request.workers,
                 trace=trace)
    last_row = matrix.to_rational()[-1]
    total = sum((entry * value
                 for entry, value in zip(last_row, vector.entries)
                 if entry and value),
                GaussianRational(0))
    return total, params.chunks, params.norm_bound


def _refined_norm(recurrence: Recurrence, request: EvalRequest
                  ) -> Union[OneNorm, TransformedNorm]:
    try:
        return TransformedNorm(
                recurrence, request.point,
                opt_norm_transform(recurrence, request.point,
                                   hint_precisions=request.hint_precisions))
    except CertificationError as error:
        logger.warning('Falling back to plain 1-norm: {error}'
                       .format(error=error))
        return OneNorm()


def evaluate_both_and_compare(request: EvalRequest) -> Comparison:
    """
    Evaluates in both modes and checks that values agree
    within ``2 ** (1 - p)``.
    """
    classic = evaluate(replace(request,
                               mode='classic'))
    trunc = evaluate(replace(request,
                             mode='trunc'))
    squared_difference = (classic.value.to_gaussian_rational()
                          - trunc.value.to_gaussian_rational()).norm()
    check_agreement(squared_difference, request.precision)
    return Comparison(classic, trunc, squared_difference)


def check_agreement(squared_difference: Fraction, precision: int) -> None:
    if squared_difference > Fraction(1, 1 << (2 * precision - 2)):
        raise CorrectnessRegression('Classic and truncated values differ '
                                    'by more than 2^{exponent}.'
                                    .format(exponent=1 - precision))
