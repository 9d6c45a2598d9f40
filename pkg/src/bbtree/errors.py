"""Exception hierarchy shared by the library and the CLI."""


class BackboneError(Exception):
    """Base class for every error raised by bbtree."""


# Graph construction, I/O and connectivity


class GraphError(BackboneError):
    """Invalid graph input or a graph-level precondition failure."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered pair was given twice."""


class VertexOutOfRangeError(GraphError):
    """A vertex label lies outside 0..n-1 (or 1..n in DIMACS)."""


class EdgeNotInGraphError(GraphError):
    """An edge restriction or backbone mentions a pair that is not an edge of the host graph."""


class DimacsSyntaxError(GraphError):
    """A DIMACS line could not be parsed."""


class MissingHeaderError(GraphError):
    """A DIMACS edge line appeared before the `p edge` header, or there was no header."""


class NotConnectedError(GraphError):
    """The (restricted) edge set does not connect every vertex."""


class NotConnectedInputError(NotConnectedError):
    """The solver was handed a disconnected graph."""


class InvalidParameterError(GraphError):
    """A numeric parameter is outside its allowed range."""


class DegreeZeroError(GraphError):
    """A backbone leaves some vertex isolated, so the lower-bound hypothesis fails."""


# Colorings


class ColoringError(BackboneError):
    """Invalid coloring input."""


class SizeMismatchError(ColoringError):
    """The coloring and the graph disagree on the number of vertices."""


class InvalidColorError(ColoringError):
    """A color lies outside 1..k."""


class ColorOutOfRangeError(InvalidColorError):
    """A color passed to an interval query lies outside 1..k."""


class SameColorError(ColoringError):
    """A Kempe chain was requested between a color and itself."""


class NotAKempeComponentError(ColoringError):
    """A vertex set handed to a Kempe swap is not a full two-color component."""


class ImproperColoringError(ColoringError):
    """A coloring that must be proper has a monochromatic edge."""


# Solver


class SolverError(BackboneError):
    """The backbone solver could not finish."""


class TooSmallError(SolverError):
    """The graph has fewer vertices than the operation needs."""


class AlgorithmStalledError(SolverError):
    """A recoloring step broke one of the invariants the construction relies on."""


class VerificationFailedError(SolverError):
    """A produced solution failed its own verification."""


# Exponential searches


class ComputationLimitError(BackboneError):
    """An exponential search hit its configured limit."""


class TooLargeError(ComputationLimitError):
    """The instance exceeds the size guard of an exhaustive routine."""


class BudgetExceededError(ComputationLimitError):
    """The exact chromatic search explored more nodes than its budget."""


class CapExceededError(ComputationLimitError):
    """Spanning-tree enumeration produced more trees than its cap."""
