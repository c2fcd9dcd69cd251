import contextvars
import logging
from concurrent.futures import (Executor,
                                ThreadPoolExecutor)
from typing import (Optional,
                    Sequence,
                    Tuple)

from holoprec.arithmetic import GaussianRational
from holoprec.arithmetic.matrices import (Matrix,
                                          bits_count,
                                          identity,
                                          map_entries,
                                          multiply)
from holoprec.config import DEFAULT_THRESHOLD
from holoprec.errors import ConfigurationError
from holoprec.models import (EvalPoint,
                             ExactProduct,
                             InitialVector,
                             Recurrence)
from holoprec.services.frontend import hat_step_matrix
from .ledger import (allocate,
                     release)

logger = logging.getLogger(__name__)


def bin_split(recurrence: Recurrence,
              point: EvalPoint,
              start: int,
              stop: int,
              *,
              threshold: int = DEFAULT_THRESHOLD,
              workers: int = 1) -> ExactProduct:
    """
    Returns exact product of cleared step matrices over ``[start, stop)``
    computed by a balanced product tree.

    Intermediate products are registered in the active ledger
    for the duration of the call.
    With several workers sibling subtrees near the root
    are computed concurrently.
    """
    if not 0 <= start <= stop:
        raise ValueError('Range bounds should satisfy 0 <= start <= stop, '
                         'but found [{start}, {stop}).'
                         .format(start=start,
                                 stop=stop))
    if threshold < 1:
        raise ConfigurationError('Threshold should be positive, '
                                 'but found {threshold}.'
                                 .format(threshold=threshold))
    if start == stop:
        return ExactProduct(identity(recurrence.padded_degree + 1),
                            start, stop)
    depth = max(workers, 1).bit_length() - 1
    if depth:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            matrix = _split(recurrence, point, start, stop,
                            threshold=threshold,
                            executor=executor,
                            depth=depth)
    else:
        matrix = _split(recurrence, point, start, stop,
                        threshold=threshold)
    release(bits_count(matrix))
    return ExactProduct(matrix, start, stop)


def _split(recurrence: Recurrence,
           point: EvalPoint,
           start: int,
           stop: int,
           *,
           threshold: int,
           executor: Optional[Executor] = None,
           depth: int = 0) -> Matrix:
    if stop - start <= threshold:
        return _leaf(recurrence, point, start, stop)
    middle = (start + stop) // 2
    if depth:
        # at most 2 ** depth - 1 pending tasks, fewer than workers
        context = contextvars.copy_context()
        future = executor.submit(context.run, _split,
                                 recurrence, point, middle, stop,
                                 threshold=threshold,
                                 executor=executor,
                                 depth=depth - 1)
        low = _split(recurrence, point, start, middle,
                     threshold=threshold,
                     executor=executor,
                     depth=depth - 1)
        high = future.result()
    else:
        low = _split(recurrence, point, start, middle,
                     threshold=threshold)
        high = _split(recurrence, point, middle, stop,
                      threshold=threshold)
    result = multiply(high, low)
    allocate(bits_count(result))
    release(bits_count(low) + bits_count(high))
    return result


def _leaf(recurrence: Recurrence,
          point: EvalPoint,
          start: int,
          stop: int) -> Matrix:
    result = hat_step_matrix(recurrence, point, start)
    result_bits = bits_count(result)
    allocate(result_bits)
    for index in range(start + 1, stop):
        step = hat_step_matrix(recurrence, point, index)
        step_bits = bits_count(step)
        allocate(step_bits)
        product = multiply(step, result)
        product_bits = bits_count(product)
        allocate(product_bits)
        release(step_bits + result_bits)
        result, result_bits = product, product_bits
    return result


def reduce(product: ExactProduct) -> Matrix:
    """Returns ``P(start, stop)`` by dividing out the corner."""
    corner = product.corner
    if not corner:
        raise ZeroDivisionError('Product corner vanishes on [{start}, {stop}).'
                                .format(start=product.start,
                                        stop=product.stop))
    divisor = GaussianRational(corner)
    return map_entries(lambda entry: GaussianRational(entry) / divisor,
                       product.matrix)


def join(high: ExactProduct, low: ExactProduct) -> ExactProduct:
    """Returns product over ``[low.start, high.stop)`` of adjacent products."""
    if low.stop != high.start:
        raise ValueError('Products should be adjacent, '
                         'but found [{}, {}) and [{}, {}).'
                         .format(low.start, low.stop,
                                 high.start, high.stop))
    return ExactProduct(multiply(high.matrix, low.matrix),
                        low.start, high.stop)


def partial_sum(product: ExactProduct, vector: InitialVector
                ) -> GaussianRational:
    """Returns the partial sum coordinate of ``P(start, stop) * vector``."""
    corner = product.corner
    if not corner:
        raise ZeroDivisionError('Product corner vanishes on [{start}, {stop}).'
                                .format(start=product.start,
                                        stop=product.stop))
    return (_dot_last_row(product.matrix, vector.entries)
            / GaussianRational(corner))


def advance_state(product: ExactProduct,
                  state: Sequence[GaussianRational]
                  ) -> Tuple[GaussianRational, ...]:
    """
    Maps state ``u[start]`` to ``u[stop]``
    by the leading block of the product.
    """
    corner = product.corner
    if not corner:
        raise ZeroDivisionError('Product corner vanishes on [{start}, {stop}).'
                                .format(start=product.start,
                                        stop=product.stop))
    size = len(state)
    divisor = GaussianRational(corner)
    return tuple((sum((GaussianRational(entry) * value
                       for entry, value in zip(row[:size], state)
                       if entry and value),
                      GaussianRational(0))
                  / divisor).normalize()
                 for row in product.matrix[:size])


def _dot_last_row(matrix: Matrix, entries: Sequence[GaussianRational]
                  ) -> GaussianRational:
    return sum((GaussianRational(entry) * value
                for entry, value in zip(matrix[-1], entries)
                if entry and value),
               GaussianRational(0))
