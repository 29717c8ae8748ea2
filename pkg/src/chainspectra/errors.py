"""Exception hierarchy shared by every module in the package."""


class ChainSpectraError(Exception):
    pass


class NotRational(ChainSpectraError, ValueError):
    """A quadratic number expected to be rational carried a sqrt(14) part."""


class InvalidN(ChainSpectraError, ValueError):
    pass


class DimensionMismatch(ChainSpectraError, ValueError):
    pass


class FactorizationMismatch(ChainSpectraError):
    def __init__(self, n, index, expected, got):
        self.n = n
        self.index = index
        self.expected = expected
        self.got = got
        super().__init__(
            f"n={n}: coefficient {index} of P_L is {expected}, "
            f"but P_LA * P_LS gives {got}"
        )


class ConvergenceFailure(ChainSpectraError, RuntimeError):
    pass


class Mismatch(ChainSpectraError):
    """Two routes to the same exact quantity disagree."""

    def __init__(self, what, left, right):
        self.what = what
        self.left = left
        self.right = right
        super().__init__(f"{what}: {left} != {right}")


class MismatchD(Mismatch):
    def __init__(self, j, left, right):
        self.j = j
        super().__init__(f"D{j}", left, right)


class CoefficientMismatch(Mismatch):
    pass


class RecurrenceMismatch(Mismatch):
    pass


class NonInteger(ChainSpectraError, ArithmeticError):
    pass


class SingularSystem(ChainSpectraError, ArithmeticError):
    pass


class UnknownObject(ChainSpectraError, KeyError):
    pass
