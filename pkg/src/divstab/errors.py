"""Exception hierarchy shared by every engine."""


class DivstabError(Exception):
    """Base class for all library errors."""


class Unbounded(DivstabError, ValueError):
    """A half-space system whose solution set escapes to infinity."""


class ZeroVolume(DivstabError, ValueError):
    """Normalisation by the volume of a degenerate polytope."""


class InvalidInterval(DivstabError, ValueError):
    """Integration bounds in the wrong order."""


class NotFano(DivstabError, ValueError):
    """Fan rays whose anticanonical polytope is unbounded or degenerate."""


class ConstraintViolated(DivstabError, ValueError):
    """Parameters outside the range a closed-form formula covers."""


class NegativeX(DivstabError, ValueError):
    pass


class OutOfRange(DivstabError, ValueError):
    pass


class InvalidSequence(DivstabError, ValueError):
    """A model sequence failed validation; ``issues`` lists what broke."""

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues) or "invalid sequence")


class FitMismatch(DivstabError, ArithmeticError):
    """Sampled values are not reproduced by a single polynomial.

    Usually the sampling step is not a multiple of the quasi-polynomial
    period; doubling ``k0`` is the suggested escalation.
    """

    def __init__(self, message, suggested_k0=None):
        self.suggested_k0 = suggested_k0
        super().__init__(message)
