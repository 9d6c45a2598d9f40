"""Named graph families and exhaustive enumeration of small connected graphs."""

from collections.abc import Iterator
from enum import StrEnum
from itertools import combinations
from typing import Optional

from ..errors import InvalidParameterError, TooLargeError
from ..utils.logging import get_logger
from .graph import Edge, Graph, from_edges

logger = get_logger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MAX_ENUMERATE_N = 7


class GraphFamily(StrEnum):
    """Families accepted by :func:`generate`."""

    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    STAR = "star"
    WHEEL = "wheel"
    COMPLETE_BIPARTITE = "complete_bipartite"
    PETERSEN = "petersen"
    OCTAHEDRON = "octahedron"
    ICOSAHEDRON = "icosahedron"
    GNP = "gnp"
    STACKED_TRIANGULATION = "stacked_triangulation"


def splitmix64(seed: int, counter: int) -> int:
    """Counter-based 64-bit draw: the counter-th output of SplitMix64 seeded with seed."""
    z = (seed + (counter + 1) * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _require(value: Optional[int], name: str, family: str, minimum: int) -> int:
    if value is None:
        raise InvalidParameterError(f"family {family!r} needs --{name}")
    if value < minimum:
        raise InvalidParameterError(f"family {family!r} needs {name} >= {minimum}, got {value}")
    return value


def _cycle_edges(vertices: list[int]) -> list[Edge]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def _gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"edge probability must lie in [0, 1], got {p}")
    if not 0 <= seed <= MASK64:
        raise InvalidParameterError(f"seed must be an unsigned 64-bit integer, got {seed}")
    threshold = int(p * 2.0**64)
    edges = [
        pair
        for counter, pair in enumerate(combinations(range(n), 2))
        if splitmix64(seed, counter) < threshold
    ]
    return from_edges(n, edges)


def _stacked_triangulation(n: int, seed: int) -> Graph:
    # Every insertion splits an inner face into three; the outer face stays (0, 1, 2).
    edges: list[Edge] = [(0, 1), (0, 2), (1, 2)]
    faces: list[tuple[int, int, int]] = [(0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(splitmix64(seed, v - 3) % len(faces))
        edges.extend([(a, v), (b, v), (c, v)])
        faces.extend([(a, b, v), (a, c, v), (b, c, v)])
    return from_edges(n, edges)


def _icosahedron() -> Graph:
    # 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
    upper = list(range(1, 6))
    lower = list(range(6, 11))
    edges = [(0, u) for u in upper] + [(11, w) for w in lower]
    edges += _cycle_edges(upper) + _cycle_edges(lower)
    for i, u in enumerate(upper):
        edges.append((u, lower[i]))
        edges.append((u, lower[(i + 1) % 5]))
    return from_edges(12, edges)


def generate(
    family: GraphFamily | str,
    n: Optional[int] = None,
    a: Optional[int] = None,
    b: Optional[int] = None,
    p: Optional[float] = None,
    seed: Optional[int] = None,
) -> Graph:
    """Build a member of a named family."""
    try:
        family = GraphFamily(family)
    except ValueError as e:
        raise InvalidParameterError(f"unknown graph family {family!r}") from e

    match family:
        case GraphFamily.COMPLETE:
            size = _require(n, "n", family, 1)
            return from_edges(size, combinations(range(size), 2))
        case GraphFamily.CYCLE:
            size = _require(n, "n", family, 3)
            return from_edges(size, _cycle_edges(list(range(size))))
        case GraphFamily.PATH:
            size = _require(n, "n", family, 1)
            return from_edges(size, [(i, i + 1) for i in range(size - 1)])
        case GraphFamily.STAR:
            size = _require(n, "n", family, 1)
            return from_edges(size, [(0, i) for i in range(1, size)])
        case GraphFamily.WHEEL:
            size = _require(n, "n", family, 4)
            rim = list(range(1, size))
            return from_edges(size, [(0, v) for v in rim] + _cycle_edges(rim))
        case GraphFamily.COMPLETE_BIPARTITE:
            left = _require(a, "a", family, 1)
            right = _require(b, "b", family, 1)
            return from_edges(
                left + right,
                [(u, left + w) for u in range(left) for w in range(right)],
            )
        case GraphFamily.PETERSEN:
            outer = _cycle_edges(list(range(5)))
            spokes = [(i, i + 5) for i in range(5)]
            inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
            return from_edges(10, outer + spokes + inner)
        case GraphFamily.OCTAHEDRON:
            return from_edges(
                6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2]
            )
        case GraphFamily.ICOSAHEDRON:
            return _icosahedron()
        case GraphFamily.GNP:
            size = _require(n, "n", family, 1)
            if p is None or seed is None:
                raise InvalidParameterError("family 'gnp' needs --p and --seed")
            return _gnp(size, p, seed)
        case GraphFamily.STACKED_TRIANGULATION:
            size = _require(n, "n", family, 3)
            if seed is None:
                raise InvalidParameterError("family 'stacked_triangulation' needs --seed")
            return _stacked_triangulation(size, seed)


def _mask_is_connected(n: int, pairs: list[Edge], mask: int) -> bool:
    adjacency = [0] * n
    bit = 0
    while mask >> bit:
        if mask >> bit & 1:
            u, v = pairs[bit]
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        bit += 1

    full = (1 << n) - 1
    reached = frontier = 1
    while frontier:
        grown = reached
        pending = frontier
        while pending:
            low = pending & -pending
            grown |= adjacency[low.bit_length() - 1]
            pending ^= low
        frontier = grown & ~reached
        reached = grown
    return reached == full


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield every connected labeled graph on n vertices in ascending edge-bitmask order.

    Bit i of the mask selects the i-th pair of combinations(range(n), 2).
    """
    if n < 1:
        raise InvalidParameterError(f"vertex count must be at least 1, got {n}")
    if n > MAX_ENUMERATE_N:
        raise TooLargeError(f"enumeration is limited to n <= {MAX_ENUMERATE_N}, got {n}")

    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        if _mask_is_connected(n, pairs, mask):
            count += 1
            yield from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
    logger.debug("Enumeration finished", n=n, connected=count)
