import logging
import math
from fractions import Fraction

from holoprec.arithmetic.directed import (modulus_lower,
                                          modulus_upper,
                                          round_down)
from holoprec.errors import OutOfDisk
from holoprec.models import (EvalPoint,
                             ThetaODE)
from holoprec.types import RadiusBoundType

logger = logging.getLogger(__name__)

BISECTION_STEPS = 48


def radius_lower_bound(ode: ThetaODE) -> RadiusBoundType:
    """
    Returns ``|c_0| / (|c_0| + max(|c_j|))`` for ``a_r = sum(c_j * z ** j)``,
    a lower bound of the smallest root modulus.
    """
    leading = ode.leading_coefficient
    if leading.degree <= 0:
        return math.inf
    constant = modulus_lower(leading.coefficient(0))
    maximum = max(modulus_upper(coefficient)
                  for coefficient in leading.coefficients[1:])
    return constant / (constant + maximum)


def refined_radius_lower_bound(ode: ThetaODE) -> RadiusBoundType:
    """
    Returns a lower bound of the positive root of
    ``|c_0| = sum(|c_j| * t ** j for j >= 1)``,
    which bounds from below every root modulus of ``a_r``.
    """
    crude = radius_lower_bound(ode)
    if crude == math.inf or not crude:
        return crude
    leading = ode.leading_coefficient
    constant = modulus_lower(leading.coefficient(0))
    moduli = [modulus_upper(coefficient)
              for coefficient in leading.coefficients]

    def majorant(argument: Fraction) -> Fraction:
        result = Fraction(0)
        for modulus in reversed(moduli[1:]):
            result = (result + modulus) * argument
        return result

    low = round_down(crude, 32)
    high = 2 * low
    while majorant(high) <= constant:
        low, high = high, 2 * high
    for _ in range(BISECTION_STEPS):
        middle = (low + high) / 2
        if majorant(middle) <= constant:
            low = middle
        else:
            high = middle
    return max(low, crude)


def check_in_disk(ode: ThetaODE, point: EvalPoint) -> RadiusBoundType:
    """
    Returns radius bound certifying ``|zeta| < rho``
    or raises ``OutOfDisk``.
    """
    bound = refined_radius_lower_bound(ode)
    if bound != math.inf and point.value.norm() >= bound * bound:
        raise OutOfDisk('Point {point} is not certified inside '
                        'the disk of convergence '
                        '(radius lower bound {bound:.6g}), '
                        'pass "--assume-in-disk" to override.'
                        .format(point=point,
                                bound=float(bound)))
    logger.debug('Radius lower bound {bound}.'
                 .format(bound=float(bound)))
    return bound
