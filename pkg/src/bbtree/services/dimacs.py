"""DIMACS .col reader and writer.

Labels are 1-based in the file and 0-based everywhere else.
"""

from ..errors import DimacsSyntaxError, MissingHeaderError, SelfLoopError, VertexOutOfRangeError
from ..utils.logging import get_logger
from .graph import Edge, Graph, from_edges, normalize_edge

logger = get_logger(__name__)

HEADER_FORMATS = ("edge", "col")


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise DimacsSyntaxError(f"line {line_no}: expected an integer, got {token!r}") from e


def parse_dimacs(text: bytes | str) -> Graph:
    """Parse a DIMACS graph, tolerating repeated edge lines."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise DimacsSyntaxError(f"input is not valid UTF-8: {e}") from e

    n: int | None = None
    declared_m = 0
    edges: set[Edge] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue

        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise DimacsSyntaxError(f"line {line_no}: second problem line")
            if len(tokens) != 4 or tokens[1] not in HEADER_FORMATS:
                raise DimacsSyntaxError(f"line {line_no}: expected 'p edge <n> <m>', got {raw!r}")
            n = _parse_int(tokens[2], line_no)
            declared_m = _parse_int(tokens[3], line_no)
            if n < 1 or declared_m < 0:
                raise DimacsSyntaxError(f"line {line_no}: bad header counts n={n} m={declared_m}")
        elif kind == "e":
            if n is None:
                raise MissingHeaderError(f"line {line_no}: edge line before 'p edge' header")
            if len(tokens) != 3:
                raise DimacsSyntaxError(f"line {line_no}: expected 'e <u> <v>', got {raw!r}")
            u = _parse_int(tokens[1], line_no)
            v = _parse_int(tokens[2], line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRangeError(f"line {line_no}: edge ({u}, {v}) outside 1..{n}")
            if u == v:
                raise SelfLoopError(f"line {line_no}: self-loop at vertex {u}")
            edges.add(normalize_edge(u - 1, v - 1))
        else:
            raise DimacsSyntaxError(f"line {line_no}: unknown line type {kind!r}")

    if n is None:
        raise MissingHeaderError("no 'p edge' header found")

    if declared_m != len(edges):
        logger.warning(
            "DIMACS edge count differs from header",
            declared=declared_m,
            distinct=len(edges),
        )

    graph = from_edges(n, sorted(edges))
    logger.debug("DIMACS graph parsed", n=graph.n, m=graph.m)
    return graph


def write_dimacs(g: Graph) -> bytes:
    """Serialize g with sorted edges, LF endings and no comments."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode("ascii")
