"""Exception hierarchy. Every error raised by the package derives from KleinianError."""


class KleinianError(ValueError):
    pass


class NonUnitDeterminant(KleinianError):
    pass


class NotRealParameters(KleinianError):
    pass


class DegenerateSquareRoot(KleinianError):
    pass


class NotElliptic(KleinianError):
    pass


class NotNonPrimitiveElliptic(KleinianError):
    pass


class ZeroGamma(KleinianError):
    pass


class NoAxis(KleinianError):
    pass


class DegenerateGeodesic(KleinianError):
    pass


class OutOfRange(KleinianError):
    pass


class HypothesisViolated(KleinianError):
    pass


class TableConsistencyError(KleinianError):
    pass


class BranchAmbiguity(KleinianError):
    """Both or neither square-root branch passed the side condition."""


class NotApplicable(KleinianError):
    """The witness is undefined in the current regime."""


class PreconditionViolated(KleinianError):
    pass


class ConstructionFailure(KleinianError):
    pass


class InvalidRow(KleinianError):
    pass
