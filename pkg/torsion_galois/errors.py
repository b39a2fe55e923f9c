class TorsionGaloisError(Exception):
    """Base class of every error raised by torsion-galois."""


class ArgumentError(TorsionGaloisError, ValueError):
    pass


class SingularCurveError(ArgumentError):
    pass


class InadmissibleLinearFunctionError(ArgumentError):
    pass


class InexactDivisionError(TorsionGaloisError, ArithmeticError):
    def __init__(self, remainder, message: str = "division leaves a nonzero remainder"):
        super().__init__(f"{message}: {remainder}")
        self.remainder = remainder


class NumericError(TorsionGaloisError):
    pass


class InconsistencyError(TorsionGaloisError):
    """A classifier branch that the theory rules out was reached."""


class InternalError(TorsionGaloisError):
    pass


class SkipSignal(TorsionGaloisError):
    """Not a failure: the input is outside the operation's domain and the caller should move on."""


class BadPrimeError(SkipSignal):
    pass


class BadReductionError(SkipSignal):
    pass


class NotPIntegralError(SkipSignal):
    pass


class RegimeError(SkipSignal):
    pass
