"""Exception types shared across the package."""


class TiltlabError(Exception):
    """Base class for all tiltlab errors."""


class MalformedInput(TiltlabError):
    """Input file or value does not match the expected schema."""


class CyclicQuiver(TiltlabError):
    """The arrow set contains an oriented cycle."""


class DimensionMismatch(TiltlabError):
    """Vector or matrix sizes are inconsistent with the quiver."""


class QuiverMismatch(TiltlabError):
    """Two objects live over different quivers."""


class NotARoot(TiltlabError):
    """A dimension vector is not a positive root."""


class NonDynkinUnsupported(TiltlabError):
    """Operation needs a Dynkin quiver (or an indecomposable it cannot certify)."""


class NoExtension(TiltlabError):
    """Universal extension requested where Ext^1 vanishes."""


class ConeNotIndecomposable(TiltlabError):
    """A cone that must be indecomposable split into several summands."""


class DegreeOutOfRange(TiltlabError):
    """A graded arrow degree falls outside the admissible window."""


class ExtObstruction(TiltlabError):
    """Ext-vanishing required of a cluster tilting set fails."""


class LiftFailure(TiltlabError):
    """No unambiguous in-domain lift of an exchange triangle exists."""


class ConvexityViolation(TiltlabError):
    """A maximal line segment has the wrong length."""


class NonSphericalType(TiltlabError):
    """Braid-group machinery needs an ADE diagram."""
