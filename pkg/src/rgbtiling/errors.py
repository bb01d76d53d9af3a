"""Exception hierarchy.

Every error raised by the library derives from :class:`DomainError`, so callers
(and the command line front end) can separate bad input from bugs.
"""


class DomainError(Exception):
    """Base class for all library errors."""


# embedding
class EmbeddingError(DomainError):
    pass


class NotSimple(EmbeddingError):
    pass


class NotConnected(EmbeddingError):
    pass


class NotPlanarEmbedding(EmbeddingError):
    pass


class InconsistentRotation(EmbeddingError):
    pass


class NonTriangleInnerFace(EmbeddingError):
    pass


class ForbiddenSmallOuterFace(EmbeddingError):
    pass


class ForbiddenSharedOuterEdge(EmbeddingError):
    pass


class NotACycle(EmbeddingError):
    pass


class CycleUsesSharedOuterEdge(EmbeddingError):
    pass


class CannotTriangulateSimply(EmbeddingError):
    pass


# generator
class NotFlippable(DomainError):
    pass


class BoundaryEdge(DomainError):
    pass


class ResourceLimit(DomainError):
    pass


# tiling / canal
class InvalidSingleColorTiling(DomainError):
    pass


class HostNotSingleOuterFacet(DomainError):
    pass


class SharedOuterEdgesPresent(DomainError):
    pass


class NotARing(DomainError):
    pass


# coloring
class NotProper(DomainError):
    pass


class ColorOutOfRange(DomainError):
    pass


class NotGrand(DomainError):
    pass


class RedOddCycle(DomainError):
    pass


class VertexNotInPair(DomainError):
    pass


# stats
class NonQuadFace(DomainError):
    pass
