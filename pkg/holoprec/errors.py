class HoloprecError(Exception):
    pass


class InvalidTolerance(HoloprecError, ValueError):
    pass


class ParseError(HoloprecError, ValueError):
    def __init__(self, message: str,
                 *,
                 field: str = None) -> None:
        if field is not None:
            message = '{field}: {message}'.format(field=field,
                                                  message=message)
        super().__init__(message)
        self.field = field


class DegenerateOperator(HoloprecError, ValueError):
    pass


class NotOrdinaryPoint(HoloprecError, ValueError):
    pass


class SingularRecurrence(HoloprecError, ArithmeticError):
    def __init__(self, index: int) -> None:
        super().__init__('leading recurrence coefficient vanishes '
                         'at n = {index}'.format(index=index))
        self.index = index


class ArityError(HoloprecError, ValueError):
    pass


class OutOfDisk(HoloprecError, ValueError):
    pass


class ConfigurationError(HoloprecError, ValueError):
    pass


class CertificationError(HoloprecError, ArithmeticError):
    pass


class InsufficientData(HoloprecError, ValueError):
    pass


class CorrectnessRegression(HoloprecError, AssertionError):
    pass


class WorkingPrecisionExceeded(HoloprecError, AssertionError):
    pass
