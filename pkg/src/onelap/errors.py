"""Exception hierarchy shared by all onelap modules."""


class OneLapError(Exception):
    """Base class for all errors raised by this package."""


# -- complexes ---------------------------------------------------------------

class EmptyInput(OneLapError):
    """No faces were supplied where at least one is required."""


class DuplicateVertexInFace(OneLapError):
    """A face listed the same vertex twice."""


class InvalidVertex(OneLapError):
    """A vertex id is not a non-negative integer."""


class DimensionOutOfRange(OneLapError):
    """A face dimension argument lies outside the valid range."""


class FaceNotInComplex(OneLapError):
    """The referenced face is not a face of the complex."""


# -- feasibility -------------------------------------------------------------

class MalformedSystem(OneLapError):
    """A linear system violates its structural requirements."""


# -- eigen -------------------------------------------------------------------

class LengthMismatch(OneLapError):
    """A chain vector does not match the number of d-faces."""


class DegenerateNorm(OneLapError):
    """The requested norm weights vanish on some coordinate."""


class NegativeMu(OneLapError):
    """Candidate eigenvalues must be non-negative."""


class ZeroVector(OneLapError):
    """The zero vector is not admissible here."""


# -- spectrum ----------------------------------------------------------------

class EmptyDimension(OneLapError):
    """The complex has no faces of the requested dimension."""


class BudgetExceeded(OneLapError):
    """An exact search exceeded its configured node or point budget."""


# -- nodal -------------------------------------------------------------------

class DomainMismatch(OneLapError):
    """The given face set is not a nodal domain of the vector."""


# -- combinatorics -----------------------------------------------------------

class MissingInput(OneLapError):
    """A required eigenvalue input was not supplied."""


# -- constructions -----------------------------------------------------------

class DimensionMismatch(OneLapError):
    """Two faces that must share a dimension do not."""


class NotSubcomplex(OneLapError):
    """The given face set is not a subcomplex."""


class NotAMotif(OneLapError):
    """The given subcomplex fails the motif conditions."""


class ConditionViolated(OneLapError):
    """A dimension hypothesis fails, so the dependent check is skipped."""
