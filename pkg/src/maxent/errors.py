"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class MaxentError(Exception):
    """Base class; the CLI maps every subclass to exit code 2."""


class LoopRejected(MaxentError):
    pass


class VertexOutOfRange(MaxentError):
    pass


class EmptySelection(MaxentError):
    pass


class MalformedGraph6(MaxentError):
    pass


class Singular(MaxentError):
    pass


class NotATree(MaxentError):
    pass


class OddOrder(MaxentError):
    pass


class NonBinaryEntry(MaxentError):
    pass


class TooLarge(MaxentError):
    pass


class BadModulus(MaxentError):
    pass


class BadSelection(MaxentError):
    pass


class NotPerfectTree(MaxentError):
    pass


class NotElementaryUnicyclic(MaxentError):
    pass


class NotBipartite(MaxentError):
    pass


class NotALeaf(MaxentError):
    pass


class NotAReplaceablePath(MaxentError):
    pass


class NoEdges(MaxentError):
    pass


class NotSignedUnit(MaxentError):
    pass


class DiagonalNonzero(MaxentError):
    pass


class DimensionMismatch(MaxentError):
    pass


class BadCut(MaxentError):
    pass


class ZeroVector(MaxentError):
    pass


class NonCertifiable(MaxentError):
    pass
