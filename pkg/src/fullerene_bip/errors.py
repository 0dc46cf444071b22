"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class FullereneError(Exception):
    """Base class for all errors raised by this package."""


# graph construction / validation


class GraphError(FullereneError):
    pass


class AsymmetricAdjacency(GraphError):
    pass


class NonCubic(GraphError):
    pass


class LoopOrMultiEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NonPlanar(GraphError):
    pass


class BadFaceLength(GraphError):
    pass


class WrongPentagonCount(GraphError):
    pass


class EdgeNotPresent(GraphError):
    pass


# planar_code


class PlanarCodeError(FullereneError):
    pass


class BadHeader(PlanarCodeError):
    pass


class TruncatedRecord(PlanarCodeError):
    pass


class VertexIdOutOfRange(PlanarCodeError):
    pass


# bipartizer


class OverlapInvariantViolated(FullereneError):
    """Two shortest dual paths of an optimal matching shared a dual edge."""


class WrongVertexCount(FullereneError):
    pass


class Exceeded(FullereneError):
    """No bipartizing edge set of size <= ``limit`` exists."""

    def __init__(self, limit: int):
        super().__init__(f"no bipartizing edge set of size <= {limit}")
        self.limit = limit


# patches


class PatchError(FullereneError):
    pass


class NotACycle(PatchError):
    pass


class SeedOnBoundaryCrossing(PatchError):
    pass


class NotTwoConnected(PatchError):
    pass


class IdentityViolated(PatchError):
    pass


class NotNormal(PatchError):
    pass


class LayerLemmaViolated(PatchError):
    pass


class NegativeRunLength(PatchError):
    pass


class PreconditionP6(PatchError):
    pass
