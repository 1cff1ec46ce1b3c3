"""Exception types shared across the package."""


class HadamardError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(HadamardError):
    """Operands have incompatible shapes or orders."""


class NearZeroEntry(HadamardError):
    """An entry needed as a divisor has modulus too small."""


class NotHadamard(HadamardError):
    """Input matrix fails the Hadamard defect checks."""


class OrderUnsupported(HadamardError):
    """Operation is not defined for matrices of this order."""


class ParamOutOfRange(HadamardError):
    """Family parameter outside its stated domain."""


class InadmissibleSigns(HadamardError):
    """Sign pattern violates s11*s21 == s12*s22."""


class SingularZ(HadamardError):
    """A Z-block entry is too close to zero to solve through."""


class MaxIterExceeded(HadamardError):
    """Projection search ran out of iterations."""


class UnknownFamily(HadamardError):
    """Family selector tag not recognized."""
