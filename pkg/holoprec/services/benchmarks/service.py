import json
import logging
import math
from collections import defaultdict
from dataclasses import (asdict,
                         replace)
from typing import (Dict,
                    Iterable,
                    Iterator,
                    List,
                    Optional,
                    Sequence,
                    TextIO)

import numpy as np
import pandas as pd

from holoprec.arithmetic import (Dyadic,
                                 DyadicComplex)
from holoprec.arithmetic.directed import approximate_log2
from holoprec.config import (DEFAULT_BOUND_MODE,
                             DEFAULT_HINT_PRECISIONS,
                             DEFAULT_THRESHOLD)
from holoprec.errors import (ConfigurationError,
                             InsufficientData)
from holoprec.models import (CSV_COLUMNS,
                             BenchRecord,
                             EvalRequest,
                             EvalResult,
                             Problem,
                             Scaling)
from holoprec.services.common import MODES
from holoprec.services.evaluation import (check_agreement,
                                          evaluate)

logger = logging.getLogger(__name__)

MIN_FIT_RECORDS = 4


def iterate_series(problem: Problem,
                   modes: Sequence[str],
                   precisions: Iterable[int],
                   *,
                   threshold: int = DEFAULT_THRESHOLD,
                   bound_mode: str = DEFAULT_BOUND_MODE,
                   hint_precisions: Sequence[int] = DEFAULT_HINT_PRECISIONS,
                   inject_mismatch: bool = False) -> Iterator[BenchRecord]:
    """
    Yields records of requested modes per precision.

    When both modes are requested their values should agree
    within ``2 ** (1 - p)``.
    """
    modes = list(dict.fromkeys(modes))
    compared = all(mode in modes for mode in MODES)
    if inject_mismatch and not compared:
        raise ConfigurationError('Injected mismatch needs both modes, '
                                 'but found {modes}.'
                                 .format(modes=', '.join(modes)))
    for precision in precisions:
        request = EvalRequest(ode=problem.ode,
                              initial_values=problem.initial_values,
                              point=problem.point,
                              precision=precision,
                              threshold=threshold,
                              bound_mode=bound_mode,
                              hint_precisions=tuple(hint_precisions))
        results = {mode: evaluate(replace(request,
                                          mode=mode))
                   for mode in modes}
        if compared:
            if inject_mismatch:
                results['trunc'] = _perturbed(results['trunc'])
            check_agreement((results['classic'].value.to_gaussian_rational()
                             - results['trunc'].value.to_gaussian_rational())
                            .norm(),
                            precision)
        for mode in modes:
            record = to_record(problem.name, results[mode])
            logger.debug('Benchmark record {record}.'
                         .format(record=record))
            yield record


def run_series(problem: Problem,
               modes: Sequence[str],
               precisions: Iterable[int],
               **kwargs) -> List[BenchRecord]:
    return list(iterate_series(problem, modes, precisions, **kwargs))


def _perturbed(result: EvalResult) -> EvalResult:
    value = result.value
    shift = Dyadic(1, max(result.precision - 2, 0))
    return replace(result,
                   value=DyadicComplex(value.re + shift, value.im))


def to_record(problem_name: str, result: EvalResult) -> BenchRecord:
    return BenchRecord(problem=problem_name,
                       mode=result.mode,
                       p=result.precision,
                       N=result.order,
                       delta=result.chunks,
                       lgM=(approximate_log2(result.norm_bound)
                            if result.norm_bound is not None
                            else None),
                       wall_ns=result.wall_time_ns,
                       peak_bits=result.ledger_peak,
                       digest=result.digest)


def fit_scaling(records: Iterable[BenchRecord]) -> Dict[str, Scaling]:
    """
    Returns per mode least squares slope of ``lg(peak_bits)``
    against ``lg(p)`` with its coefficient of determination.
    """
    points = defaultdict(list)
    for record in records:
        points[record.mode].append((record.p, record.peak_bits))
    result = {}
    for mode, mode_points in sorted(points.items()):
        if len(mode_points) < MIN_FIT_RECORDS:
            raise InsufficientData('Fit needs at least {minimum} records '
                                   'per mode, but "{mode}" has {count}.'
                                   .format(minimum=MIN_FIT_RECORDS,
                                           mode=mode,
                                           count=len(mode_points)))
        precisions, peaks = np.log2(np.array(mode_points,
                                             dtype=float)).T
        slope, intercept = np.polyfit(precisions, peaks, 1)
        residuals = peaks - (slope * precisions + intercept)
        total = float(np.sum((peaks - peaks.mean()) ** 2))
        r_squared = (1 - float(np.sum(residuals ** 2)) / total
                     if total
                     else 1.)
        result[mode] = Scaling(exponent=float(slope),
                               r_squared=r_squared)
    return result


def write_csv(records: Iterable[BenchRecord], stream: TextIO,
              *,
              header: bool = True) -> None:
    frame = pd.DataFrame([record.to_json() for record in records],
                         columns=list(CSV_COLUMNS))
    frame.to_csv(stream,
                 header=header,
                 index=False)


def read_csv(stream: TextIO) -> List[BenchRecord]:
    frame = pd.read_csv(stream,
                        dtype={'problem': str,
                               'mode': str,
                               'digest': str},
                        float_precision='round_trip')
    return [BenchRecord(problem=row.problem,
                        mode=row.mode,
                        p=int(row.p),
                        N=int(row.N),
                        delta=None if _is_missing(row.delta) else int(
                                row.delta),
                        lgM=None if _is_missing(row.lgM) else float(row.lgM),
                        wall_ns=int(row.wall_ns),
                        peak_bits=int(row.peak_bits),
                        digest=row.digest)
            for row in frame.itertuples(index=False)]


def _is_missing(value: float) -> bool:
    return value is None or (isinstance(value, float) and math.isnan(value))


def write_json(records: Iterable[BenchRecord], stream: TextIO,
               *,
               scalings: Optional[Dict[str, Scaling]] = None) -> None:
    output = {'records': [record.to_json() for record in records]}
    if scalings is not None:
        output['fit'] = {mode: asdict(scaling)
                         for mode, scaling in scalings.items()}
    json.dump(output, stream,
              indent=2)
    stream.write('\n')


def read_json(stream: TextIO) -> List[BenchRecord]:
    return [BenchRecord(**raw) for raw in json.load(stream)['records']]
