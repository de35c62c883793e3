"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Arguments violate a documented precondition (bad user input)."""


class IntegralityError(ArithmeticError):
    """An exact-arithmetic invariant failed.

    This always signals a bug in the geometry engine, never bad input:
    Newton numbers must come out as non-negative integers, and the jump of
    an admissible monomial deformation must be strictly positive.
    """
