"""Exception types.  Every cap violation names the cap and the offending size."""


class SimplexIntError(Exception):
    """Base class for computation errors (CLI exit code 2)."""


class InputError(SimplexIntError, ValueError):
    """Malformed user input (CLI exit code 1)."""


class ExpressionSyntaxError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class DegenerateSimplex(SimplexIntError):
    pass


class FormalDegreeExceeded(SimplexIntError):
    pass


class ZeroConstantTerm(SimplexIntError, ZeroDivisionError):
    pass


class NotHomogeneous(SimplexIntError):
    pass


class CapExceeded(SimplexIntError):
    """A configured size limit was hit."""

    def __init__(self, cap_name: str, size: int, limit: int):
        super().__init__(f"{cap_name}: required size {size} exceeds the limit {limit}")
        self.cap_name = cap_name
        self.size = size
        self.limit = limit


class EnumerationLimitExceeded(CapExceeded):
    pass


class EffectiveVariableCapExceeded(CapExceeded):
    pass


class PolarizationCapExceeded(CapExceeded):
    pass


class ExpansionLimitExceeded(CapExceeded):
    pass
