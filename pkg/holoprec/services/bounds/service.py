import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import (Iterator,
                    Optional,
                    Sequence,
                    Tuple)

from holoprec.arithmetic import GaussianRational
from holoprec.arithmetic.directed import (approximate_log2,
                                          modulus_lower,
                                          modulus_upper,
                                          power_upper,
                                          round_down,
                                          round_up)
from holoprec.arithmetic.matrices import (Matrix,
                                          apply,
                                          identity,
                                          multiply)
from holoprec.config import (DEFAULT_HINT_PRECISIONS,
                             DEFAULT_THRESHOLD)
from holoprec.errors import (CertificationError,
                             InvalidTolerance)
from holoprec.models import (EvalPoint,
                             InitialVector,
                             NormTransform,
                             Recurrence,
                             TailCertificate)
from holoprec.services.frontend import (deviation_polynomials,
                                        is_entire,
                                        leading_coefficients,
                                        limit_companion)
from holoprec.services.product_tree import (advance_state,
                                            bin_split,
                                            join,
                                            partial_sum)
from .transform import (MODULUS_BITS,
                        build_transform,
                        modulus_norm,
                        opt_norm_transform,
                        scaled_identity)

logger = logging.getLogger(__name__)

LADDER_LENGTH = 64
LADDER_BITS = 32
HEADROOM_BITS = 64
POWER_BITS = 96
HEURISTIC_START = 16
HEURISTIC_LIMIT = 2 ** 24


@dataclass(frozen=True)
class TailConstants:
    """
    Constants of ``|C(n) - C_inf| <= deviation / (lc * (lc * n - offset))``
    valid for ``lc * n > offset``.
    """
    deviation: Fraction
    leading: Fraction
    offset: Fraction

    def bound(self, index: int) -> Fraction:
        if not self.deviation:
            return Fraction(0)
        gap = self.leading * index - self.offset
        if gap <= 0:
            raise ValueError('Deviation bound needs n > {}, but found {}.'
                             .format(self.offset / self.leading, index))
        return self.deviation / (self.leading * gap)

    def start(self, slack: Fraction) -> int:
        """Returns the least ``n >= 1`` with ``bound(n) <= slack``."""
        if not self.deviation:
            return 0
        # lc * n - offset >= deviation / (lc * slack)
        return max(1, math.ceil((self.deviation / (self.leading * slack)
                                 + self.offset) / self.leading))


def tail_constants(recurrence: Recurrence) -> TailConstants:
    deviation = max((sum((modulus_upper(coefficient, MODULUS_BITS)
                          for coefficient in polynomial.coefficients),
                         Fraction(0))
                     for polynomial in deviation_polynomials(recurrence)),
                    default=Fraction(0))
    leading = modulus_lower(leading_coefficients(recurrence)[0],
                            MODULUS_BITS)
    offset = sum((modulus_upper(coefficient, MODULUS_BITS)
                  for coefficient in recurrence.coefficients[0]
                  .coefficients[:recurrence.order]),
                 Fraction(0))
    return TailConstants(deviation, leading, offset)


def transform_headroom(transform: Matrix,
                       transform_inverse: Matrix,
                       state: Sequence[GaussianRational]) -> Fraction:
    """Returns upper bound of ``|Pi| * |Pi^-1 * u|``."""
    if not any(state):
        return Fraction(0)
    transformed = apply(transform_inverse, tuple(state))
    return round_up(modulus_norm(transform)
                    * sum((modulus_upper(entry, MODULUS_BITS)
                           for entry in transformed),
                          Fraction(0)),
                    HEADROOM_BITS)


def tail_steps(headroom: Fraction, ratio: Fraction, target: Fraction
               ) -> int:
    """
    Returns the least ``k`` with ``headroom * ratio ** k <= target``
    under upward rounded powers.
    """
    if headroom <= target:
        return 0

    def fits(steps: int) -> bool:
        return headroom * power_upper(ratio, steps, POWER_BITS) <= target

    estimate = math.ceil((approximate_log2(headroom)
                          - approximate_log2(target))
                         / -approximate_log2(ratio))
    steps = max(estimate - 2, 1)
    while not fits(steps):
        steps += 1
    while steps > 1 and fits(steps - 1):
        steps -= 1
    return steps


def _ratio_candidates(recurrence: Recurrence,
                      point: EvalPoint,
                      constants: TailConstants,
                      *,
                      hint_precisions: Sequence[int]
                      ) -> Iterator[Tuple[Fraction, NormTransform]]:
    """
    Yields pairs of ratio and transform
    with ratios decreasing towards the limit contraction.
    """
    size = recurrence.padded_degree
    if is_entire(recurrence):
        zeta = modulus_upper(point.value, MODULUS_BITS)
        for exponent in range(1, LADDER_LENGTH + 1):
            ratio = Fraction(1, 1 << exponent)
            scale = round_down(ratio / (2 * zeta), LADDER_BITS)
            transform = build_transform(recurrence, point,
                                        scaled_identity(size, scale),
                                        scale=scale,
                                        hint_precision=0)
            if transform is not None and transform.contraction < ratio:
                yield ratio, transform
        return
    transform = opt_norm_transform(recurrence, point,
                                   hint_precisions=hint_precisions)
    limit = transform.contraction
    if not constants.deviation:
        yield limit, transform
        return
    for exponent in range(1, LADDER_LENGTH + 1):
        ratio = round_up(limit + (1 - limit) / (1 << exponent),
                         LADDER_BITS + exponent)
        if limit < ratio < 1:
            yield ratio, transform


def truncation_order(recurrence: Recurrence,
                     point: EvalPoint,
                     vector: InitialVector,
                     tolerance: Rational,
                     *,
                     hint_precisions: Sequence[int] = DEFAULT_HINT_PRECISIONS,
                     threshold: int = DEFAULT_THRESHOLD) -> TailCertificate:
    """
    Returns certificate of the least order ``N`` found over ratio candidates
    such that the series tail from ``N`` on is below ``tolerance``.
    """
    tolerance = Fraction(tolerance)
    if not 0 < tolerance < 1:
        raise InvalidTolerance('Tolerance should lie in (0, 1), '
                               'but found {tolerance}.'
                               .format(tolerance=tolerance))
    if not vector:
        return TailCertificate(0, 0, Fraction(1, 2), Fraction(0), tolerance)
    if not point.value:
        # terms vanish from index one on
        return TailCertificate(1, 1, Fraction(1, 2), Fraction(0), tolerance)
    constants = tail_constants(recurrence)
    zeta = modulus_upper(point.value, MODULUS_BITS)
    product = bin_split(recurrence, point, 0, 0,
                        threshold=threshold)
    best = None  # type: Optional[TailCertificate]
    for ratio, transform in _ratio_candidates(
            recurrence, point, constants,
            hint_precisions=hint_precisions):
        spread = (zeta * modulus_norm(transform.matrix)
                  * modulus_norm(transform.inverse))
        start = constants.start((ratio - transform.contraction) / spread)
        if best is not None and start >= best.order:
            break
        if start > product.stop:
            product = join(bin_split(recurrence, point, product.stop, start,
                                     threshold=threshold),
                           product)
        state = advance_state(product, vector.state)
        headroom = transform_headroom(transform.matrix, transform.inverse,
                                      state)
        steps = (tail_steps(headroom, ratio, tolerance * (1 - ratio))
                 if headroom
                 else 0)
        logger.debug('Ratio {ratio:.6g} needs start {start} '
                     'and {steps} more terms.'
                     .format(ratio=float(ratio),
                             start=start,
                             steps=steps))
        if best is None or start + steps < best.order:
            best = TailCertificate(start + steps, start, ratio, headroom,
                                   tolerance, transform.matrix,
                                   transform.inverse)
    if best is None:
        raise CertificationError('No ratio candidate yields a tail bound.')
    logger.info('Certified truncation order {order} with ratio {ratio:.6g}.'
                .format(order=best.order,
                        ratio=float(best.ratio)))
    return best


def verify_certificate(recurrence: Recurrence,
                       point: EvalPoint,
                       vector: InitialVector,
                       certificate: TailCertificate,
                       *,
                       threshold: int = DEFAULT_THRESHOLD) -> bool:
    """Replays every inequality of the certificate in exact arithmetic."""
    order, start = certificate.order, certificate.start
    ratio, headroom = certificate.ratio, certificate.headroom
    if not 0 <= start <= order or not 0 < ratio < 1 or headroom < 0:
        logger.warning('Certificate parameters are out of range.')
        return False
    state = advance_state(bin_split(recurrence, point, 0, start,
                                    threshold=threshold),
                          vector.state)
    if not headroom:
        if any(state):
            logger.warning('Certificate claims vanishing state at {start}.'
                           .format(start=start))
            return False
        return True
    size = recurrence.padded_degree
    transform = (certificate.transform
                 if certificate.transform is not None
                 else identity(size,
                               entry_type=GaussianRational))
    transform_inverse = (certificate.inverse_transform
                         if certificate.inverse_transform is not None
                         else identity(size,
                                       entry_type=GaussianRational))
    if (multiply(transform, transform_inverse)
            != identity(size,
                        entry_type=GaussianRational)):
        logger.warning('Certificate transforms are not mutually inverse.')
        return False
    contraction = modulus_norm(multiply(multiply(transform_inverse,
                                                 limit_companion(recurrence,
                                                                 point)),
                                        transform))
    constants = tail_constants(recurrence)
    if constants.deviation and (
            not start or constants.leading * start <= constants.offset):
        logger.warning('Deviation bound does not hold from {start} on.'
                       .format(start=start))
        return False
    spread = (modulus_upper(point.value, MODULUS_BITS)
              * modulus_norm(transform) * modulus_norm(transform_inverse))
    if contraction + spread * constants.bound(start) > ratio:
        logger.warning('Ratio {ratio} does not bound the transformed steps.'
                       .format(ratio=ratio))
        return False
    if transform_headroom(transform, transform_inverse, state) > headroom:
        logger.warning('Headroom does not bound the state at {start}.'
                       .format(start=start))
        return False
    # headroom * ratio ** k <= tolerance * (1 - ratio) over integers
    steps = order - start
    left = (headroom.numerator * ratio.numerator ** steps
            * certificate.tolerance.denominator * ratio.denominator)
    right = (certificate.tolerance.numerator
             * (ratio.denominator - ratio.numerator)
             * headroom.denominator * ratio.denominator ** steps)
    if left > right:
        logger.warning('Geometric tail exceeds the tolerance.')
        return False
    return True


def heuristic_order(recurrence: Recurrence,
                    point: EvalPoint,
                    vector: InitialVector,
                    tolerance: Rational,
                    *,
                    threshold: int = DEFAULT_THRESHOLD) -> int:
    """
    Returns ``2 * N`` for the least doubling ``N``
    whose partial sums ``S_N`` and ``S_2N`` differ by at most
    ``tolerance / 4``, without any guarantee.
    """
    tolerance = Fraction(tolerance)
    if not 0 < tolerance < 1:
        raise InvalidTolerance('Tolerance should lie in (0, 1), '
                               'but found {tolerance}.'
                               .format(tolerance=tolerance))
    order = HEURISTIC_START
    product = bin_split(recurrence, point, 0, order,
                        threshold=threshold)
    previous = partial_sum(product, vector)
    while order <= HEURISTIC_LIMIT:
        product = join(bin_split(recurrence, point, order, 2 * order,
                                 threshold=threshold),
                       product)
        current = partial_sum(product, vector)
        if (current - previous).norm() <= tolerance ** 2 / 16:
            logger.warning('Heuristic truncation order {order} '
                           'is not certified.'
                           .format(order=2 * order))
            return 2 * order
        previous, order = current, 2 * order
    raise CertificationError('Partial sums did not settle '
                             'below {limit} terms.'
                             .format(limit=2 * HEURISTIC_LIMIT))
