"""Exception hierarchy shared by every module."""


class ChomogError(Exception):
    """Base class; the CLI maps it to exit code 2."""


class InvalidDigraph(ChomogError):
    pass


class LoopEdge(InvalidDigraph):
    pass


class SymmetricPair(InvalidDigraph):
    pass


class VertexOutOfRange(InvalidDigraph):
    pass


class InvalidPartition(ChomogError):
    pass


class NotTripartiteOriented(ChomogError):
    pass


class QuotientLoop(InvalidDigraph):
    pass


class QuotientSymmetric(InvalidDigraph):
    pass


class TooShort(ChomogError):
    pass


class TooSmall(ChomogError):
    pass


class TooLarge(ChomogError):
    pass


class SearchExhausted(ChomogError):
    pass


class NotPartialIso(ChomogError):
    pass


class NotBipartite(ChomogError):
    pass


class NoEdges(ChomogError):
    pass


class UnknownEdge(ChomogError):
    pass


class NotConnected(ChomogError):
    pass


class InvalidSpec(ChomogError):
    """A permutation pair that cannot describe a quotient of T(2)."""


class FixedPoint(InvalidSpec):
    pass


class WrongOrder(InvalidSpec):
    pass


class NotTransitive(InvalidSpec):
    pass
