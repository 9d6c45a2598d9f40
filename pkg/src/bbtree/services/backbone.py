"""Spanning-tree backbone colorings with the optimal palette bound.

The construction starts from any proper t-coloring, moves the upper half of its colors
to the top of a palette of size k = max(t, ceil(t/2) + q), and then grows the largest
component of the q-subgraph one Kempe swap at a time until it spans the graph.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Optional

from ..errors import (
    AlgorithmStalledError,
    ColorOutOfRangeError,
    ImproperColoringError,
    InvalidParameterError,
    NotConnectedInputError,
    SizeMismatchError,
    TooSmallError,
    VerificationFailedError,
)
from ..utils.logging import get_logger
from .coloring import Coloring, dsatur, exact_chromatic, is_proper, kempe_component, kempe_swap
from .graph import (
    DisjointSet,
    Edge,
    EdgeSet,
    Graph,
    bfs_spanning_tree,
    connected_components,
    cut_edges,
)

logger = get_logger(__name__)


class SolveMode(StrEnum):
    EXACT = "exact"
    HEURISTIC = "heuristic"


class SwapCase(StrEnum):
    """Which recoloring rule produced a swap."""

    FREE_COLOR = "free-color"
    SATURATED = "saturated"


def _check_q(q: int) -> None:
    if q < 1:
        raise InvalidParameterError(f"separation q must be at least 1, got {q}")


def target_k(t: int, q: int) -> int:
    """max(t, ceil(t/2) + q): the optimal bound for a graph with chromatic number t."""
    if t < 1:
        raise InvalidParameterError(f"color count must be at least 1, got {t}")
    _check_q(q)
    return max(t, (t + 1) // 2 + q)


def naive_upper_bound(t: int, q: int) -> int:
    """Largest color of the spread transform applied to a t-coloring."""
    return q * (t - 1) + 1


def best_tree_value_q2(chi: int) -> int:
    """Optimal tree-backbone value for q = 2: chi when chi >= 4, chi + 1 otherwise."""
    if chi < 2:
        raise InvalidParameterError(f"needs a graph with at least one edge (chi >= 2), got {chi}")
    return target_k(chi, 2)


def forbidden_interval(i: int, q: int, k: int) -> frozenset[int]:
    """Colors within distance < q of i, clipped to 1..k."""
    _check_q(q)
    if not 1 <= i <= k:
        raise ColorOutOfRangeError(f"color {i} outside 1..{k}")
    return frozenset(range(max(1, i - q + 1), min(k, i + q - 1) + 1))


def dead_colors(k: int, q: int) -> frozenset[int]:
    """Colors whose forbidden interval is the whole palette.

    No endpoint of a backbone edge can take one of these colors.
    """
    _check_q(q)
    return frozenset(i for i in range(1, k + 1) if i - q + 1 <= 1 and i + q - 1 >= k)


@dataclass(frozen=True)
class Palette:
    """Color geometry: low block 1..x, unused gap, high block x+kprime+1..k."""

    t: int
    q: int
    k: int

    @classmethod
    def build(cls, t: int, q: int) -> "Palette":
        return cls(t=t, q=q, k=target_k(t, q))

    @property
    def x(self) -> int:
        return (self.t + 1) // 2

    @property
    def kprime(self) -> int:
        return self.k - self.t

    @property
    def low_block(self) -> range:
        return range(1, self.x + 1)

    @property
    def gap_block(self) -> range:
        return range(self.x + 1, self.x + self.kprime + 1)

    @property
    def high_block(self) -> range:
        return range(self.x + self.kprime + 1, self.k + 1)

    def is_palette_color(self, i: int) -> bool:
        return i in self.low_block or i in self.high_block


def q_subgraph(g: Graph, c: Coloring, q: int) -> EdgeSet:
    """Edges whose endpoint colors differ by at least q."""
    if c.n != g.n:
        raise SizeMismatchError(f"coloring covers {c.n} vertices, graph has {g.n}")
    return [(u, v) for u, v in g.edges() if abs(c.colors[u] - c.colors[v]) >= q]


def initial_palette_coloring(c: Coloring, q: int) -> tuple[Coloring, Palette]:
    """Shift colors above x by kprime so they occupy the top of the palette."""
    palette = Palette.build(c.max_color, q)
    shifted = tuple(i if i <= palette.x else i + palette.kprime for i in c.colors)
    return Coloring(colors=shifted, k=palette.k), palette


@dataclass(frozen=True)
class TraceStep:
    """One Kempe swap of the construction."""

    case: SwapCase
    edge: Edge
    color: int
    component_size: int
    largest_before: int


@dataclass
class ConnectResult:
    coloring: Coloring
    palette: Palette
    trace: list[TraceStep] = field(default_factory=list)


def _largest_component(g: Graph, c: Coloring, q: int) -> frozenset[int]:
    components = connected_components(g, q_subgraph(g, c, q))
    # max keeps the first of equal sizes, and components are ordered by smallest vertex
    return max(components, key=len)


def _check_palette(c: Coloring, palette: Palette) -> None:
    for v, color in enumerate(c.colors):
        if not palette.is_palette_color(color):
            raise AlgorithmStalledError(
                f"vertex {v} holds gap color {color} (palette x={palette.x}, k={palette.k})"
            )


def _swap_outside(
    g: Graph, c: Coloring, grown: frozenset[int], v: int, j: int
) -> tuple[Coloring, frozenset[int]]:
    chain = kempe_component(g, c, v, j)
    if chain & grown:
        raise AlgorithmStalledError(
            f"Kempe chain from {v} on colors {c.colors[v]}/{j} meets the largest component"
        )
    return kempe_swap(g, c, chain, j, c.colors[v]), chain


def _free_color(
    c: Coloring, palette: Palette, cut: Sequence[Edge]
) -> Optional[tuple[Edge, int]]:
    for u, v in cut:
        blocked = forbidden_interval(c.colors[u], palette.q, palette.k) | forbidden_interval(
            c.colors[v], palette.q, palette.k
        )
        for j in range(1, palette.k + 1):
            if j not in blocked:
                return (u, v), j
    return None


def _saturated_color(
    c: Coloring, palette: Palette, cut: Sequence[Edge]
) -> Optional[tuple[Edge, int]]:
    # Every cut edge blocks the whole palette here, so the far end of the palette
    # from c(u) is a color v can move to without touching the grown component.
    for u, v in cut:
        blocked = forbidden_interval(c.colors[u], palette.q, palette.k)
        if palette.k not in blocked:
            return (u, v), palette.k
        if 1 not in blocked:
            return (u, v), 1
    return None


def connect_q_subgraph(g: Graph, c0: Coloring, q: int) -> ConnectResult:
    """Recolor a proper coloring until its q-subgraph is connected.

    Raises AlgorithmStalledError if a swap would touch the grown component, leave the
    palette, or fail to enlarge the largest component.
    """
    _check_q(q)
    if g.n < 2:
        raise TooSmallError(f"need at least 2 vertices, got {g.n}")
    if c0.n != g.n:
        raise SizeMismatchError(f"coloring covers {c0.n} vertices, graph has {g.n}")
    if len(connected_components(g)) != 1:
        raise NotConnectedInputError("graph is not connected")
    if not is_proper(g, c0):
        raise ImproperColoringError("input coloring has a monochromatic edge")

    c, palette = initial_palette_coloring(c0, q)
    trace: list[TraceStep] = []
    grown = _largest_component(g, c, q)

    while len(grown) < g.n:
        _check_palette(c, palette)
        cut = cut_edges(g, grown)

        choice = _free_color(c, palette, cut)
        case = SwapCase.FREE_COLOR
        if choice is None:
            choice = _saturated_color(c, palette, cut)
            case = SwapCase.SATURATED
        if choice is None:
            raise AlgorithmStalledError(
                f"no cut edge of the {len(grown)}-vertex component admits a recoloring"
            )

        (u, v), j = choice
        if j == c.colors[v]:
            raise AlgorithmStalledError(f"vertex {v} already holds target color {j}")
        if not palette.is_palette_color(j):
            raise AlgorithmStalledError(f"selected gap color {j} for edge ({u}, {v})")

        c, chain = _swap_outside(g, c, grown, v, j)
        trace.append(
            TraceStep(
                case=case,
                edge=(u, v),
                color=j,
                component_size=len(chain),
                largest_before=len(grown),
            )
        )
        logger.debug(
            "Kempe swap applied",
            case=case.value,
            edge=(u, v),
            color=j,
            chain=len(chain),
            largest=len(grown),
        )

        previous = len(grown)
        grown = _largest_component(g, c, q)
        if len(grown) <= previous:
            raise AlgorithmStalledError(
                f"largest q-component stuck at {previous} vertices after swap on ({u}, {v})"
            )

    _check_palette(c, palette)
    return ConnectResult(coloring=c, palette=palette, trace=trace)


def extract_backbone(g: Graph, c: Coloring, q: int) -> EdgeSet:
    """Breadth-first spanning tree of the q-subgraph, rooted at vertex 0."""
    return bfs_spanning_tree(g, q_subgraph(g, c, q), root=0)


@dataclass(frozen=True)
class VerificationReport:
    proper: bool
    spanning_tree: bool
    backbone_ok: bool
    k_used: int

    @property
    def ok(self) -> bool:
        return self.proper and self.spanning_tree and self.backbone_ok


def _is_spanning_tree(g: Graph, tree: Sequence[Sequence[int]]) -> bool:
    if len(tree) != g.n - 1:
        return False
    dsu = DisjointSet(g.n)
    for pair in tree:
        if len(pair) != 2 or not g.has_edge(pair[0], pair[1]):
            return False
        if not dsu.union(pair[0], pair[1]):
            return False
    return dsu.components == 1


def verify_backbone_coloring(
    g: Graph, tree: Iterable[Sequence[int]], c: Coloring, q: int
) -> VerificationReport:
    """Check a claimed solution; failures become report fields instead of exceptions."""
    edges = [tuple(pair) for pair in tree]
    sized = c.n == g.n
    proper = sized and is_proper(g, c)
    spanning = _is_spanning_tree(g, edges)
    backbone_ok = sized and all(
        len(pair) == 2
        and all(0 <= w < g.n for w in pair)
        and abs(c.colors[pair[0]] - c.colors[pair[1]]) >= q
        for pair in edges
    )
    return VerificationReport(
        proper=proper,
        spanning_tree=spanning,
        backbone_ok=backbone_ok,
        k_used=c.max_color,
    )


@dataclass
class SolveResult:
    """Certified backbone coloring: proper on G, gap >= q on every tree edge."""

    coloring: Coloring
    tree: EdgeSet
    k_achieved: int
    k_target: int
    iterations: int
    mode: SolveMode
    t: int
    q: int
    trace: list[TraceStep] = field(default_factory=list)


def solve(
    g: Graph,
    q: int,
    mode: SolveMode | str = SolveMode.EXACT,
    budget: Optional[int] = None,
) -> SolveResult:
    """Spanning tree and coloring with max color at most max(t, ceil(t/2) + q).

    In exact mode t is the chromatic number, which makes the result optimal over all
    spanning trees. Heuristic mode uses the DSATUR color count instead.
    """
    mode = SolveMode(mode)
    _check_q(q)
    if len(connected_components(g)) != 1:
        raise NotConnectedInputError("graph is not connected")

    if g.n == 1:
        # A single vertex has an empty backbone, so one color suffices.
        coloring = Coloring(colors=(1,), k=1)
        return SolveResult(
            coloring=coloring,
            tree=[],
            k_achieved=1,
            k_target=target_k(1, q),
            iterations=0,
            mode=mode,
            t=1,
            q=q,
        )

    if mode is SolveMode.EXACT:
        start = exact_chromatic(g, budget).witness
    else:
        start = dsatur(g)
    t = start.max_color

    connected = connect_q_subgraph(g, start, q)
    tree = extract_backbone(g, connected.coloring, q)
    report = verify_backbone_coloring(g, tree, connected.coloring, q)
    if not report.ok:
        raise VerificationFailedError(f"solver output failed verification: {report}")

    result = SolveResult(
        coloring=connected.coloring,
        tree=tree,
        k_achieved=report.k_used,
        k_target=target_k(t, q),
        iterations=len(connected.trace),
        mode=mode,
        t=t,
        q=q,
        trace=connected.trace,
    )
    if result.k_achieved > connected.palette.k:
        raise VerificationFailedError(
            f"used color {result.k_achieved} exceeds palette bound {connected.palette.k}"
        )
    logger.info(
        "Backbone solved",
        n=g.n,
        m=g.m,
        q=q,
        t=t,
        mode=mode.value,
        k_achieved=result.k_achieved,
        k_target=result.k_target,
        iterations=result.iterations,
    )
    return result
