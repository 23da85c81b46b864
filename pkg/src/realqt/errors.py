"""Exception hierarchy.  Every error raised by the library derives from
:class:`RealQTError` and subclasses ``ValueError`` so that callers treating
bad input generically keep working."""


class RealQTError(ValueError):
    pass


class NotSymmetric(RealQTError):
    pass


class NotHermitian(RealQTError):
    pass


class NotSpecialSymmetric(RealQTError):
    pass


class OddDimension(RealQTError):
    pass


class DimMismatch(RealQTError):
    pass


class JCommutationViolated(RealQTError):
    pass


class DimNotDivisibleBy4(RealQTError):
    pass


class OutOfSubspace(RealQTError):
    pass


class NotUnitary(RealQTError):
    pass


class RuleMismatch(RealQTError):
    pass


class InvalidWeights(RealQTError):
    pass


class LocalFactorNotState(RealQTError):
    pass


class NotATheoryElement(RealQTError):
    pass
