"""
Search of a change of basis in which ``zeta * C_inf`` contracts.

Eigenvalue hints are untrusted floating point approximations,
everything derived from them is checked in exact arithmetic.
"""
import logging
import math
from fractions import Fraction
from numbers import Rational
from typing import (List,
                    Optional,
                    Sequence,
                    Tuple)

import mpmath
import numpy as np
from mpmath.libmp import NoConvergence

from holoprec.arithmetic import GaussianRational
from holoprec.arithmetic.directed import (modulus_upper,
                                          round_down,
                                          round_up)
from holoprec.arithmetic.matrices import (Matrix,
                                          identity,
                                          inverse,
                                          multiply)
from holoprec.config import DEFAULT_HINT_PRECISIONS
from holoprec.errors import CertificationError
from holoprec.models import (EvalPoint,
                             NormTransform,
                             Recurrence)
from holoprec.services.frontend import (is_entire,
                                        leading_coefficients,
                                        limit_companion)

logger = logging.getLogger(__name__)

MODULUS_BITS = 64
SCALE_BITS = 24
MAX_HALVINGS = 8

Cluster = Tuple[GaussianRational, int]


def modulus_norm(matrix: Matrix) -> Fraction:
    """Returns upper bound of the induced 1-norm with true moduli."""
    return max(sum((modulus_upper(entry, MODULUS_BITS) for entry in column),
                   Fraction(0))
               for column in zip(*matrix))


def eigenvalue_hints(recurrence: Recurrence, precision: int
                     ) -> Optional[List[mpmath.mpc]]:
    """
    Returns approximate roots of ``sum(lc_k * mu ** (s - k))``,
    the eigenvalues of ``C_inf``, or ``None`` if root finding diverged.
    """
    coefficients = leading_coefficients(recurrence)
    if precision <= 53:
        roots = np.roots(np.array([complex(coefficient.re, coefficient.im)
                                   for coefficient in coefficients]))
        if not np.all(np.isfinite(roots)):
            return None
        return [mpmath.mpc(complex(root)) for root in roots]
    with mpmath.workprec(precision):
        try:
            roots = mpmath.polyroots([mpmath.mpc(coefficient.re,
                                                 coefficient.im)
                                      for coefficient in coefficients],
                                     maxsteps=50 + precision,
                                     extraprec=precision)
        except NoConvergence:
            return None
        # polyroots unwraps a single root
        return list(roots) if isinstance(roots, list) else [roots]


def cluster_roots(roots: Sequence[mpmath.mpc], precision: int
                  ) -> List[Cluster]:
    """
    Groups roots closer than ``2 ** (-precision / count)``
    and rationalizes their means.
    """
    tolerance = mpmath.mpf(2) ** (-precision / max(len(roots), 1))
    groups = []  # type: List[List[mpmath.mpc]]
    with mpmath.workprec(precision + 8):
        for root in roots:
            for group in groups:
                center = mpmath.fsum(group) / len(group)
                if abs(root - center) <= tolerance * max(1, abs(center)):
                    group.append(root)
                    break
            else:
                groups.append([root])
        return [(_rationalize(mpmath.fsum(group) / len(group),
                              precision + 8),
                 len(group))
                for group in groups]


def _rationalize(value: mpmath.mpc, bits: int) -> GaussianRational:
    scale = 1 << bits
    return GaussianRational.from_components(
            Fraction(int(mpmath.nint(mpmath.ldexp(value.real, bits))), scale),
            Fraction(int(mpmath.nint(mpmath.ldexp(value.imag, bits))), scale))


def confluent_vandermonde(clusters: Sequence[Cluster], scale: Rational
                          ) -> Matrix:
    """
    Returns matrix of scaled Jordan chains,
    column ``k`` of cluster ``mu`` has entries
    ``scale ** k * binomial(i, k) * mu ** (i - k)``.
    """
    size = sum(multiplicity for _, multiplicity in clusters)
    columns = []
    for eigenvalue, multiplicity in clusters:
        for step in range(multiplicity):
            factor = GaussianRational.from_components(
                    Fraction(scale) ** step)
            columns.append([factor * math.comb(row, step)
                            * _power(eigenvalue, row - step)
                            if row >= step
                            else GaussianRational(0)
                            for row in range(size)])
    return tuple(tuple(column[row] for column in columns)
                 for row in range(size))


def _power(value: GaussianRational, exponent: int) -> GaussianRational:
    result = GaussianRational(1)
    for _ in range(exponent):
        result = (result * value).normalize()
    return result.normalize()


def scaled_identity(size: int, scale: Rational) -> Matrix:
    """Returns ``diag(scale ** i)``, the transform of nilpotent limits."""
    scale = Fraction(scale)
    zero = GaussianRational(0)
    return tuple(tuple(GaussianRational.from_components(scale ** row)
                       if row == column
                       else zero
                       for column in range(size))
                 for row in range(size))


def build_transform(recurrence: Recurrence,
                    point: EvalPoint,
                    matrix: Matrix,
                    *,
                    scale: Fraction,
                    hint_precision: int) -> Optional[NormTransform]:
    """
    Returns transform with exactly checked contraction
    or ``None`` if the matrix is singular or does not contract.
    """
    try:
        matrix_inverse = inverse(matrix)
    except ZeroDivisionError:
        return None
    contraction = modulus_norm(multiply(multiply(matrix_inverse,
                                                 limit_companion(recurrence,
                                                                 point)),
                                        matrix))
    if contraction >= 1:
        return None
    return NormTransform(matrix, matrix_inverse, contraction, scale,
                         hint_precision)


def opt_norm_transform(recurrence: Recurrence,
                       point: EvalPoint,
                       *,
                       scale: Optional[Rational] = None,
                       hint_precisions: Sequence[int]
                       = DEFAULT_HINT_PRECISIONS) -> NormTransform:
    """
    Returns transform ``Pi`` such that the 1-norm of
    ``Pi^-1 * zeta * C_inf * Pi`` is below one.
    """
    size = recurrence.padded_degree
    zeta = modulus_upper(point.value, MODULUS_BITS)
    if not point.value:
        return NormTransform(identity(size,
                                      entry_type=GaussianRational),
                             identity(size,
                                      entry_type=GaussianRational),
                             Fraction(0), Fraction(1), 0)
    if is_entire(recurrence):
        scale = (Fraction(scale)
                 if scale is not None
                 else round_down(1 / (4 * zeta), SCALE_BITS))
        for _ in range(MAX_HALVINGS + 1):
            result = build_transform(recurrence, point,
                                     scaled_identity(size, scale),
                                     scale=scale,
                                     hint_precision=0)
            if result is not None:
                return result
            scale /= 2
        raise CertificationError('No contracting scaling found '
                                 'for a nilpotent limit.')
    for precision in hint_precisions:
        roots = eigenvalue_hints(recurrence, precision)
        if roots is None:
            logger.debug('Root finding at {precision} bits diverged.'
                         .format(precision=precision))
            continue
        clusters = cluster_roots(roots, precision)
        spectral_radius = max(modulus_upper(eigenvalue, MODULUS_BITS)
                              for eigenvalue, _ in clusters)
        if zeta * spectral_radius >= 1:
            raise CertificationError('Point lies outside the disk '
                                     'of convergence of the recurrence.')
        current_scale = (
            Fraction(scale)
            if scale is not None
            else round_down((1 - zeta * spectral_radius)
                            / (2 * max(1, zeta)),
                            SCALE_BITS))
        for _ in range(MAX_HALVINGS + 1):
            result = build_transform(
                    recurrence, point,
                    confluent_vandermonde(clusters, current_scale),
                    scale=current_scale,
                    hint_precision=precision)
            if result is not None:
                logger.debug('Transform from {precision}-bit hints '
                             'with scale {scale} contracts by '
                             '{contraction:.6g}.'
                             .format(precision=precision,
                                     scale=current_scale,
                                     contraction=float(result.contraction)))
                return result
            current_scale /= 2
    raise CertificationError('No contracting transform found '
                             'from eigenvalue hints at {precisions} bits.'
                             .format(precisions=', '.join(
                                     map(str, hint_precisions))))
