import logging
from fractions import Fraction
from typing import (Iterator,
                    List,
                    Optional,
                    Union)

from holoprec.arithmetic import (DyadicComplexMatrix,
                                 GaussianInt)
from holoprec.arithmetic.directed import (approximate_log2,
                                          ceil_lg)
from holoprec.arithmetic.matrices import identity
from holoprec.config import DEFAULT_THRESHOLD
from holoprec.errors import (ConfigurationError,
                             WorkingPrecisionExceeded)
from holoprec.models import (EvalPoint,
                             Recurrence,
                             TraceRecord,
                             TruncParams)
from holoprec.services.product_tree import (bin_split,
                                            ledger_probe)
from holoprec.services.product_tree.ledger import (allocate,
                                                   release)
from .norms import (OneNorm,
                    TransformedNorm,
                    bound_M,
                    divide_and_truncate,
                    multiply_and_truncate)

logger = logging.getLogger(__name__)


def default_chunks(recurrence: Recurrence,
                   point: EvalPoint,
                   order: int,
                   precision: int) -> int:
    """
    Returns ``ceil((N / p) * (h + r * lg(N)))`` clamped to ``[1, N]``.
    """
    if not order:
        return 1
    height = recurrence.height + point.height
    numerator = order * (height + recurrence.order * ceil_lg(order))
    return max(1, min(order, -(-numerator // precision)))


def trunc_params(recurrence: Recurrence,
                 point: EvalPoint,
                 order: int,
                 precision: int,
                 *,
                 chunks: Optional[int] = None,
                 norm: Union[OneNorm, TransformedNorm] = None
                 ) -> TruncParams:
    if precision < 1:
        raise ConfigurationError('Precision should be positive, '
                                 'but found {precision}.'
                                 .format(precision=precision))
    if chunks is None:
        chunks = default_chunks(recurrence, point, order, precision)
    elif not 1 <= chunks <= max(order, 1):
        raise ConfigurationError('Chunks count should lie in [1, {limit}], '
                                 'but found {chunks}.'
                                 .format(limit=max(order, 1),
                                         chunks=chunks))
    if norm is None:
        norm = OneNorm()
    condition = norm.condition
    norm_bound = bound_M(recurrence, point, order, chunks,
                         Fraction(1, 1 << precision) / condition,
                         norm=norm)
    result = TruncParams(precision=precision,
                         order=order,
                         chunks=chunks,
                         norm_bound=norm_bound,
                         condition=condition)
    logger.info('Truncated splitting with N = {order}, delta = {chunks}, '
                'lg M = {lg_m:.3f}.'
                .format(order=order,
                        chunks=chunks,
                        lg_m=approximate_log2(norm_bound)))
    return result


def iterate_trunc_bin_split(recurrence: Recurrence,
                            point: EvalPoint,
                            params: TruncParams,
                            *,
                            threshold: int = DEFAULT_THRESHOLD,
                            workers: int = 1) -> Iterator[TraceRecord]:
    """
    Yields the accumulated truncated product after every chunk,
    keeping ``|P~(q) - P(q)| <= (q / delta) * eps / M ** (delta - q)``.
    """
    chunks, norm_bound = params.chunks, params.norm_bound
    condition = params.condition
    # tolerances in the transformed norm, scaled back to the plain one
    tolerance = params.tolerance / condition
    chunk_tolerance = (tolerance / (2 * chunks * norm_bound ** (chunks - 1))
                       / condition)
    cap = params.working_precision_cap
    accumulator = None
    accumulator_bits = 0
    try:
        for index in range(chunks):
            start, stop = params.chunk_bounds(index)
            chunk = bin_split(recurrence, point, start, stop,
                              threshold=threshold,
                              workers=workers)
            chunk_bits = chunk.bits_count
            allocate(chunk_bits)
            factor = divide_and_truncate(chunk, chunk_tolerance)
            factor_bits = factor.bits_count
            allocate(factor_bits)
            release(chunk_bits)
            del chunk
            _check_working_precision(factor, cap)
            if accumulator is None:
                accumulator, accumulator_bits = factor, factor_bits
            else:
                step_tolerance = (tolerance
                                  / (2 * chunks
                                     * norm_bound ** (chunks - index - 1))
                                  / condition)
                product = multiply_and_truncate(factor, accumulator,
                                                step_tolerance)
                product_bits = product.bits_count
                allocate(product_bits)
                release(factor_bits + accumulator_bits)
                _check_working_precision(product, cap)
                accumulator, accumulator_bits = product, product_bits
            _, peak = ledger_probe()
            record = TraceRecord(index=index + 1,
                                 start=start,
                                 stop=stop,
                                 chunk_bits=chunk_bits,
                                 accumulator_bits=accumulator_bits,
                                 ledger_peak=peak,
                                 accumulator=accumulator)
            logger.debug('Chunk {index}/{chunks} [{start}, {stop}): '
                         'chunk bits {chunk_bits}, '
                         'accumulator bits {accumulator_bits}.'
                         .format(index=record.index,
                                 chunks=chunks,
                                 start=start,
                                 stop=stop,
                                 chunk_bits=chunk_bits,
                                 accumulator_bits=accumulator_bits))
            yield record
    finally:
        release(accumulator_bits)


def _check_working_precision(matrix: DyadicComplexMatrix, cap: int) -> None:
    bit_length = matrix.max_entry_bit_length
    if bit_length > cap:
        raise WorkingPrecisionExceeded('Truncated entry has {bit_length} '
                                       'bits, above the cap {cap}.'
                                       .format(bit_length=bit_length,
                                               cap=cap))


def trunc_bin_split(recurrence: Recurrence,
                    point: EvalPoint,
                    order: int,
                    precision: int,
                    *,
                    chunks: Optional[int] = None,
                    threshold: int = DEFAULT_THRESHOLD,
                    norm: Union[OneNorm, TransformedNorm] = None,
                    workers: int = 1) -> DyadicComplexMatrix:
    """Returns ``P~`` with ``|P~ - P(0, N)| <= 2 ** -precision``."""
    params = trunc_params(recurrence, point, order, precision,
                          chunks=chunks,
                          norm=norm)
    return run(recurrence, point, params,
               threshold=threshold,
               workers=workers)


def run(recurrence: Recurrence,
        point: EvalPoint,
        params: TruncParams,
        *,
        threshold: int = DEFAULT_THRESHOLD,
        workers: int = 1,
        trace: Optional[List[TraceRecord]] = None
        ) -> DyadicComplexMatrix:
    result = DyadicComplexMatrix(identity(recurrence.padded_degree + 1,
                                          entry_type=GaussianInt),
                                 0)
    if not params.order:
        return result
    for record in iterate_trunc_bin_split(recurrence, point, params,
                                          threshold=threshold,
                                          workers=workers):
        if trace is not None:
            trace.append(record)
        result = record.accumulator
    return result
