"""Exception hierarchy shared by all modules."""


class CircSepError(Exception):
    """Base class for every error raised by this package."""


class InputError(CircSepError, ValueError):
    """Malformed or inconsistent input (bad labels, vertex-set mismatch, parse errors)."""


class ContractError(CircSepError):
    """A documented precondition of an operation was violated by the caller."""


class PreconditionError(ContractError):
    """Input is well-formed but outside the domain an operation accepts."""


class StructuralError(CircSepError):
    """An embedding or graph does not have the structure a construction needs."""


class NotSeriesParallelError(StructuralError):
    """Greedy series/parallel reduction got stuck before reaching a single edge."""


class CapabilityError(CircSepError):
    """Instance exceeds a configured computational bound."""
