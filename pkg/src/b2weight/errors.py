"""Exception types shared across the package."""


class RegionError(ValueError):
    """Parameters or arguments lie outside the admissible region."""


class ToleranceError(RuntimeError):
    """The requested tolerance cannot be certified at working precision."""


class InexactDivisionError(ArithmeticError):
    """A polynomial division that must be exact left a remainder.

    This always signals an implementation bug in the caller, never bad input.
    """


class NotProportionalError(ArithmeticError):
    """An operator result expected to be a scalar multiple of a fixed
    polynomial has extra support."""


class InvarianceError(ValueError):
    """A scalar factor required to be group-invariant is not."""


class DegenerateParameterError(ValueError):
    """A denominator Pochhammer factor vanishes for these parameters."""
