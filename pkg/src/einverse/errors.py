"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible or invalid shapes."""


class PreconditionError(ValueError):
    """An input fails a documented precondition (e.g. is not a {1}-inverse)."""


class NumericError(RuntimeError):
    """A numerical routine failed to converge or produced unusable output."""
