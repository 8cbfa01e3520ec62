"""Exception types raised across the package."""


class DerivPolyError(Exception):
    """Base class for all errors raised by derivpoly."""


class NonIntegerResult(DerivPolyError, ArithmeticError):
    """A quantity that must be an integer came out with a denominator."""


class ComplexResidue(DerivPolyError, ArithmeticError):
    """A polynomial that must be real kept a nonzero imaginary coefficient."""


class PoleError(DerivPolyError, ValueError):
    """Evaluation point is (numerically) at a pole."""


class DomainError(DerivPolyError, ValueError):
    """Argument outside the domain where the routine is valid."""


class ConvergenceError(DerivPolyError, RuntimeError):
    """Adaptive routine gave up before meeting its tolerance."""
