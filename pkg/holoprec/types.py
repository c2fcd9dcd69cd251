from fractions import Fraction
from typing import (Any,
                    Dict,
                    Union)

SettingsType = Dict[str, Any]
# positive rational radius bound or ``math.inf``
RadiusBoundType = Union[Fraction, float]
JSONType = Dict[str, Any]
