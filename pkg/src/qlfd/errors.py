"""Exception types shared across the package."""


class QuiverInputError(ValueError):
    """Malformed quiver data: bad arrow endpoints, dimension mismatch, bad JSON."""


class DisconnectedQuiver(QuiverInputError):
    """Operation requires a connected quiver."""


class CyclicQuiver(ValueError):
    """Operation requires an acyclic quiver or an arrow-increasing grading."""


class NotTame(ValueError):
    """Operation is only defined for tame quivers."""


class NonSquare(ValueError):
    """The Saito matrix (or a relative-invariant matrix) is not square."""


class NotSincere(ValueError):
    """Dimension vector has a zero entry where a sincere vector is required."""


class PrimeTooSmall(ValueError):
    """Field characteristic too small for a derivative-based squarefree test."""


class NotInRepPrime(ValueError):
    """Representation fails the injectivity/surjectivity condition at the reflected vertex."""


class NotLfdShape(ValueError):
    """A degenerate source/sink violates the unique-arrow, dimension-one shape.

    This is a definitive certificate that the pair does not define a linear
    free divisor.
    """


class StepLimit(RuntimeError):
    """Normal-form iteration exceeded the configured step budget."""
