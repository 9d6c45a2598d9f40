"""Brute-force ground truth for backbone colorings on small graphs.

Nothing here calls the exact chromatic solver or the backbone construction, so the
oracle can be used to cross-check both.
"""

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Optional

from ..errors import (
    AlgorithmStalledError,
    CapExceededError,
    DegreeZeroError,
    InvalidParameterError,
    NotConnectedError,
    TooLargeError,
    TooSmallError,
)
from ..utils.logging import get_logger
from .backbone import target_k
from .coloring import ChromaticResult, Coloring
from .graph import (
    DisjointSet,
    Edge,
    EdgeSet,
    Graph,
    check_edges_in_graph,
    greedy_clique,
    is_connected,
    min_degree,
)

logger = get_logger(__name__)

DEFAULT_MAX_VERTICES = 12
DEFAULT_TREE_CAP = 1_000_000


@dataclass(frozen=True)
class BackboneInstance:
    """A graph together with the edge set of a spanning backbone."""

    g: Graph
    h: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "h", tuple(sorted(check_edges_in_graph(self.g, self.h))))

    @classmethod
    def of(cls, g: Graph, h: Iterable[Sequence[int]]) -> "BackboneInstance":
        return cls(g=g, h=tuple((int(p[0]), int(p[1])) for p in h))

    def backbone(self) -> Graph:
        return self.g.subgraph_from_edges(self.h)


@dataclass(frozen=True)
class BbcResult:
    value: int
    witness: Coloring
    nodes_explored: int


@dataclass(frozen=True)
class TreeSearchResult:
    """Extreme BBC value over spanning trees with the first tree attaining it."""

    value: int
    tree: EdgeSet
    coloring: Coloring
    trees_examined: int
    nodes_explored: int


def _bfs_order(g: Graph) -> list[int]:
    order: list[int] = []
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


class _BackboneSearch:
    """Backtracking for a q-backbone k-coloring, one vertex at a time in BFS order."""

    def __init__(self, inst: BackboneInstance, q: int):
        g = inst.g
        self.order = _bfs_order(g)
        position = {v: i for i, v in enumerate(self.order)}
        backbone_pairs = set(inst.h)

        # For each vertex, its already-placed neighbors and the gap each edge requires.
        self.constraints: list[list[tuple[int, int]]] = []
        for v in self.order:
            earlier = [
                (w, q if (min(v, w), max(v, w)) in backbone_pairs else 1)
                for w in g.neighbors(v)
                if position[w] < position[v]
            ]
            self.constraints.append(earlier)

        self.colors = [0] * g.n
        self.nodes = 0

    def feasible(self, k: int) -> Optional[list[int]]:
        self.colors = [0] * len(self.colors)
        # Reversing the palette preserves every gap, so the first vertex stays in the lower half.
        if self._place(0, k, first_limit=(k + 1) // 2):
            return self.colors.copy()
        return None

    def _place(self, index: int, k: int, first_limit: int) -> bool:
        self.nodes += 1
        if index == len(self.order):
            return True
        v = self.order[index]
        limit = first_limit if index == 0 else k
        for color in range(1, limit + 1):
            if all(abs(color - self.colors[w]) >= gap for w, gap in self.constraints[index]):
                self.colors[v] = color
                if self._place(index + 1, k, first_limit):
                    return True
        self.colors[v] = 0
        return False


def search_floor(inst: BackboneInstance, q: int) -> int:
    """Trivial lower bound: a clique needs distinct colors, a backbone edge needs q+1."""
    floor = len(greedy_clique(inst.g))
    if inst.h:
        floor = max(floor, q + 1)
    return floor


def bbc_exact(
    inst: BackboneInstance, q: int, max_vertices: int = DEFAULT_MAX_VERTICES
) -> BbcResult:
    """Smallest k admitting a q-backbone k-coloring of (G, H), by exhaustive search."""
    # Connectivity of g is not enforced; the search is exact on disconnected graphs too.
    if q < 1:
        raise InvalidParameterError(f"separation q must be at least 1, got {q}")
    n = inst.g.n
    if n > max_vertices:
        raise TooLargeError(f"backbone search is limited to {max_vertices} vertices, got {n}")

    search = _BackboneSearch(inst, q)
    # Spreading an n-coloring with all colors distinct always fits under this bound.
    ceiling = q * (n - 1) + 1
    for k in range(search_floor(inst, q), ceiling + 1):
        colors = search.feasible(k)
        if colors is not None:
            return BbcResult(
                value=k,
                witness=Coloring(colors=tuple(colors), k=k),
                nodes_explored=search.nodes,
            )
    raise AlgorithmStalledError(f"no q-backbone coloring found up to k={ceiling}")


def lower_bound_check(inst: BackboneInstance, q: int, chi: int) -> bool:
    """Check BBC_q(G, H) >= max(chi, ceil(chi/2) + q) for a backbone with no isolated vertex."""
    if min_degree(inst.backbone()) < 1:
        raise DegreeZeroError("backbone leaves a vertex isolated")
    return bbc_exact(inst, q).value >= target_k(chi, q)


def _spans(dsu: DisjointSet, edges: Sequence[Edge]) -> bool:
    trial = dsu.copy()
    for u, v in edges:
        if trial.components == 1:
            break
        trial.union(u, v)
    return trial.components == 1


def enumerate_spanning_trees(g: Graph, cap: int = DEFAULT_TREE_CAP) -> Iterator[EdgeSet]:
    """Yield every spanning tree once, in lexicographic order of sorted edge lists.

    Each edge is either contracted into the tree (unless it closes a cycle) or deleted
    (unless the remaining edges would no longer span).
    """
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")

    edges = g.edges()
    target = g.n - 1
    chosen: EdgeSet = []

    def extend(index: int, dsu: DisjointSet) -> Iterator[EdgeSet]:
        if len(chosen) == target:
            yield list(chosen)
            return
        if index == len(edges):
            return
        u, v = edges[index]
        if not dsu.connected(u, v):
            contracted = dsu.copy()
            contracted.union(u, v)
            chosen.append((u, v))
            yield from extend(index + 1, contracted)
            chosen.pop()
        if _spans(dsu, edges[index + 1 :]):
            yield from extend(index + 1, dsu)

    produced = 0
    for tree in extend(0, DisjointSet(g.n)):
        produced += 1
        if produced > cap:
            raise CapExceededError(f"graph has more than {cap} spanning trees")
        yield tree


def count_spanning_trees(g: Graph, cap: int = DEFAULT_TREE_CAP) -> int:
    return sum(1 for _ in enumerate_spanning_trees(g, cap))


def _check_tree_search(g: Graph, q: int, max_vertices: int) -> None:
    if q < 1:
        raise InvalidParameterError(f"separation q must be at least 1, got {q}")
    if g.n < 2:
        raise TooSmallError(f"need at least 2 vertices, got {g.n}")
    if g.n > max_vertices:
        raise TooLargeError(f"backbone search is limited to {max_vertices} vertices, got {g.n}")


def _scan_trees(
    g: Graph, q: int, cap: int, max_vertices: int, prefer_larger: bool
) -> TreeSearchResult:
    """First spanning tree (in enumeration order) attaining the extreme BBC value."""
    best: Optional[tuple[int, EdgeSet, Coloring]] = None
    examined = 0
    nodes = 0
    floor: Optional[int] = None
    for tree in enumerate_spanning_trees(g, cap):
        inst = BackboneInstance.of(g, tree)
        result = bbc_exact(inst, q, max_vertices)
        examined += 1
        nodes += result.nodes_explored
        if best is None or (
            result.value > best[0] if prefer_larger else result.value < best[0]
        ):
            best = (result.value, tree, result.witness)
        if not prefer_larger:
            # the floor depends only on g and q, so once it is met no later tree is better
            floor = search_floor(inst, q) if floor is None else floor
            if best[0] == floor:
                break

    assert best is not None
    value, tree, coloring = best
    logger.debug(
        "Spanning trees scanned", n=g.n, q=q, value=value, trees=examined, worst=prefer_larger
    )
    return TreeSearchResult(
        value=value,
        tree=tree,
        coloring=coloring,
        trees_examined=examined,
        nodes_explored=nodes,
    )


def best_tree_exact(
    g: Graph,
    q: int,
    cap: int = DEFAULT_TREE_CAP,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> TreeSearchResult:
    """Minimum of BBC_q(G, T) over all spanning trees T."""
    _check_tree_search(g, q, max_vertices)
    return _scan_trees(g, q, cap, max_vertices, prefer_larger=False)


def worst_tree_exact(
    g: Graph,
    q: int,
    cap: int = DEFAULT_TREE_CAP,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> TreeSearchResult:
    """Maximum of BBC_q(G, T) over all spanning trees T."""
    _check_tree_search(g, q, max_vertices)
    return _scan_trees(g, q, cap, max_vertices, prefer_larger=True)


def chromatic_number_bruteforce(g: Graph) -> ChromaticResult:
    """Chromatic number by plain backtracking for k = 1, 2, ... in vertex index order."""
    colors = [0] * g.n
    nodes = 0

    def place(v: int, k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if v == g.n:
            return True
        # Colors are interchangeable, so vertex 0 can always take color 1.
        limit = 1 if v == 0 else k
        for color in range(1, limit + 1):
            if all(colors[w] != color for w in g.neighbors(v) if w < v):
                colors[v] = color
                if place(v + 1, k):
                    return True
        colors[v] = 0
        return False

    for k in range(1, g.n + 1):
        if place(0, k):
            return ChromaticResult(chi=k, witness=Coloring(colors=tuple(colors), k=k), nodes=nodes)
    raise AlgorithmStalledError("no proper coloring found with n colors")
