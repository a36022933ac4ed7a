"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes or lengths."""


class DivisionByZero(ZeroDivisionError):
    """Inversion of the zero quaternion."""


class NotHermitian(ValueError):
    """A spectral routine received a matrix that is not self-adjoint."""


class ConvergenceFailure(RuntimeError):
    """The eigensolver exhausted its sweep budget."""


class NotPositiveDefinite(ValueError):
    """A matrix function required positive definiteness and did not get it."""


class StructureViolation(ValueError):
    """A complex matrix lost the block symmetry of a quaternionic embedding."""


class NotAFrame(ValueError):
    """An operation requiring a frame received a family whose lower bound vanishes."""


class ZeroScalar(ValueError):
    """A scaling sequence contains a zero quaternion."""


class BadDimension(ValueError):
    """A generator was asked for an unsupported ambient dimension."""


class InadmissiblePerturbation(ValueError):
    """Perturbation parameters violate lambda + mu/sqrt(A) < 1."""


class SchemaError(ValueError):
    """A frame file does not match the expected document schema."""
