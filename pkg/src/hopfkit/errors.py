"""Exception hierarchy."""


class HopfkitError(Exception):
    pass


class DivisionByZero(HopfkitError, ZeroDivisionError):
    pass


class FieldMismatch(HopfkitError, TypeError):
    pass


class DegenerateQ(HopfkitError, ValueError):
    """q - q^-1 vanishes, so quantum integers are undefined."""


class OutOfRange(HopfkitError, ValueError):
    pass


class AlgebraMismatch(HopfkitError, TypeError):
    pass


class AxiomFailure(HopfkitError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class IntegralSpaceDimensionError(HopfkitError):
    pass


class InconsistentAlpha(HopfkitError):
    pass


class InconsistentG(HopfkitError):
    pass


class SingularActionMatrix(HopfkitError):
    pass


class RescalingImpossible(HopfkitError):
    pass


class SolveFailure(HopfkitError):
    pass


class ParseError(HopfkitError, ValueError):
    pass


class UnknownPreset(HopfkitError, ValueError):
    pass
