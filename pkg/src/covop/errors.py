"""Exception types raised by the covop library."""


class CovopError(Exception):
    """Base class for all covop errors."""


class WindowMismatch(CovopError):
    """Two window matrices with different radii were combined."""


class UnsupportedNormPair(CovopError):
    """A (p, q) norm pair outside the supported set was requested."""


class NoConvergence(CovopError):
    """Power iteration hit its iteration cap without meeting tolerance."""


class EmptyArc(CovopError):
    """An arc whose endpoints coincide modulo the circle was supplied."""


class RadiusExceeded(CovopError):
    """A dense structure matrix was queried beyond its declared radius."""


class UnknownFamily(CovopError):
    """An unrecognized structure-matrix family name was requested."""


class OverlappingPieces(CovopError):
    """Step-function pieces are not pairwise disjoint."""


class OutsideDisk(CovopError):
    """Exponential-transform argument lies outside the open disk |z| < 1/pi."""


class NotObservableMatrix(CovopError):
    """The matrix is not positive semidefinite with unit diagonal."""


class UnknownQuantity(CovopError):
    """An unrecognized sweep quantity identifier was requested."""
