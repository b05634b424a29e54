"""Exception hierarchy shared by all layers of the package."""


class IMultError(Exception):
    """Base class for all errors raised by :mod:`imult`."""


class UsageError(IMultError, ValueError):
    """Bad input from the caller: mismatched contexts, malformed expressions."""


class ContextMismatch(UsageError):
    """Operands live in different extension contexts."""


class MathError(IMultError, ArithmeticError):
    """Mathematically invalid request (zero polynomial, constant curve, ...)."""


class InvariantViolation(IMultError, RuntimeError):
    """An internal guarantee was broken; indicates a bug, never bad input."""


class DepthGuardExceeded(InvariantViolation):
    """The blowup recursion went deeper than deg(f) * deg(g)."""
