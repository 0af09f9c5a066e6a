"""Exception types shared across the package."""


class PVKitError(Exception):
    """Base class for all pvkit errors."""


class DivisionByZero(PVKitError, ZeroDivisionError):
    """Zero denominator in exact arithmetic."""


class ParseError(PVKitError):
    """Malformed input in the polynomial grammar."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class VariableSetMismatch(PVKitError):
    """Operands live in polynomial rings with different variable lists."""


class SettingMismatch(PVKitError):
    """Modules from different operator settings were combined."""


class NotDualizable(PVKitError):
    """Difference module with singular transition matrix."""


class NotCIdeal(PVKitError):
    """Ideal is not stable under the distinguished operator."""


class TrivialQuotient(PVKitError):
    """Quotient by the unit ideal requested."""


class SearchExhausted(PVKitError):
    """Degree-bounded search found no witness."""


class NotAFieldExtension(PVKitError):
    """Constants extension polynomial is not irreducible of degree >= 2."""


class PreconditionFailed(PVKitError):
    """A documented operation precondition does not hold."""


class NotTrivializedByR(PVKitError):
    """Solution space over the ring has deficient dimension at the bound."""


class NotSubHopf(PVKitError):
    """Generators are not closed under comultiplication/antipode at the bound."""


class NotNormalHopfIdeal(PVKitError):
    """Ideal does not define a Hopf quotient."""


class StageOrderError(PVKitError):
    """Pipeline stage requested without its required inputs."""


class InconclusiveClosure(PVKitError):
    """Operator closure of an ideal did not stabilize within the iteration cap."""
