"""Reference problems with known closed forms."""
from typing import (Dict,
                    List)

from holoprec.arithmetic import (GaussianRational,
                                 Polynomial)
from holoprec.errors import ConfigurationError
from holoprec.models import (EvalPoint,
                             Problem,
                             ThetaODE)

HALF = GaussianRational(1, 2)

CATALOG = {
    'ln2': Problem(name='ln2',
                   ode=ThetaODE([Polynomial(),
                                 Polynomial(-1),
                                 Polynomial(1, -1)]),
                   initial_values=(GaussianRational(0),
                                   GaussianRational(1)),
                   point=EvalPoint(HALF),
                   description='-ln(1 - z) at 1/2, equals ln(2)'),
    'exp': Problem(name='exp',
                   ode=ThetaODE([Polynomial(0, -1),
                                 Polynomial(1)]),
                   initial_values=(GaussianRational(1),),
                   point=EvalPoint(GaussianRational(1)),
                   description='exp(z) at 1'),
    'arctan': Problem(name='arctan',
                      ode=ThetaODE([Polynomial(),
                                    Polynomial(-1, 0, 1),
                                    Polynomial(1, 0, 1)]),
                      initial_values=(GaussianRational(0),
                                      GaussianRational(1)),
                      point=EvalPoint(HALF),
                      description='arctan(z) at 1/2'),
    'geometric': Problem(name='geometric',
                         ode=ThetaODE([Polynomial(0, -1),
                                       Polynomial(1, -1)]),
                         initial_values=(GaussianRational(1),),
                         point=EvalPoint(HALF),
                         description='1 / (1 - z) at 1/2, equals 2'),
}  # type: Dict[str, Problem]


def catalog_names() -> List[str]:
    return sorted(CATALOG)


def get_problem(name: str) -> Problem:
    try:
        return CATALOG[name]
    except KeyError:
        raise ConfigurationError('Unknown catalog problem "{name}", '
                                 'available: {names}.'
                                 .format(name=name,
                                         names=', '.join(catalog_names())))
