class ProbFubiniError(Exception):
    """Base class for every error raised by the computation layer."""


class RationalParseError(ProbFubiniError, ValueError):
    pass


class DistributionSpecError(ProbFubiniError, ValueError):
    pass


class InvalidParameterError(ProbFubiniError, ValueError):
    pass


class SeriesError(ProbFubiniError, ArithmeticError):
    pass


class UnknownIdentityError(ProbFubiniError, KeyError):
    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else "unknown identity"
