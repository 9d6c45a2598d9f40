"""Immutable simple graphs and the connectivity machinery built on them."""

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

from ..errors import (
    DuplicateEdgeError,
    EdgeNotInGraphError,
    InvalidParameterError,
    NotConnectedError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]
VertexSet = frozenset[int]
EdgeSet = list[Edge]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the pair ordered as (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted neighbor lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.adjacency[u]

    def edges(self) -> EdgeSet:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def subgraph_from_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Spanning subgraph on the same vertex set keeping only the given edges."""
        kept = check_edges_in_graph(self, edges)
        return from_edges(self.n, sorted(kept))


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph, rejecting self-loops, repeated pairs and bad labels."""
    if n < 1:
        raise InvalidParameterError(f"vertex count must be at least 1, got {n}")

    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in neighbor_sets[u]:
            raise DuplicateEdgeError(f"edge {normalize_edge(u, v)} given more than once")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    return Graph(n=n, adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets))


def check_edges_in_graph(g: Graph, edges: Iterable[Sequence[int]]) -> set[Edge]:
    """Normalize pairs and confirm each one is an edge of g."""
    kept: set[Edge] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not g.has_edge(u, v):
            raise EdgeNotInGraphError(f"({u}, {v}) is not an edge of the graph")
        kept.add(normalize_edge(u, v))
    return kept


class DisjointSet:
    """Union-find over 0..n-1 with path halving and union by size."""

    def __init__(self, n: int):
        self._parent = list(range(n))
        self._size = [1] * n
        self.components = n

    def find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; return False when they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        self.components -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def copy(self) -> "DisjointSet":
        clone = DisjointSet(0)
        clone._parent = self._parent.copy()
        clone._size = self._size.copy()
        clone.components = self.components
        return clone


def connected_components(g: Graph, restrict: Optional[Iterable[Edge]] = None) -> list[VertexSet]:
    """Partition the vertices into components, ordered by smallest member."""
    edges = g.edges() if restrict is None else check_edges_in_graph(g, restrict)
    dsu = DisjointSet(g.n)
    for u, v in edges:
        dsu.union(u, v)

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(dsu.find(v), []).append(v)
    # Vertices were appended in ascending order, so each group's first entry is its minimum.
    return [frozenset(members) for members in sorted(groups.values(), key=lambda grp: grp[0])]


def is_connected(g: Graph, restrict: Optional[Iterable[Edge]] = None) -> bool:
    """Check whether the (restricted) edge set connects all vertices."""
    return len(connected_components(g, restrict)) == 1


def cut_edges(g: Graph, h: Iterable[int]) -> EdgeSet:
    """Edges leaving h, written (inside, outside) and sorted lexicographically."""
    inside = frozenset(h)
    for v in inside:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{g.n - 1}")
    return [(u, v) for u in sorted(inside) for v in g.adjacency[u] if v not in inside]


def bfs_spanning_tree(g: Graph, restrict: Iterable[Edge], root: int = 0) -> EdgeSet:
    """Breadth-first spanning tree over the restricted edges.

    Neighbors are visited in ascending order, so the tree is deterministic.
    """
    if not 0 <= root < g.n:
        raise VertexOutOfRangeError(f"root {root} outside 0..{g.n - 1}")

    allowed: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in sorted(check_edges_in_graph(g, restrict)):
        allowed[u].append(v)
        allowed[v].append(u)
    for nbrs in allowed:
        nbrs.sort()

    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    tree: EdgeSet = []
    while queue:
        u = queue.popleft()
        for v in allowed[u]:
            if not seen[v]:
                seen[v] = True
                tree.append(normalize_edge(u, v))
                queue.append(v)

    if len(tree) != g.n - 1:
        missing = seen.index(False)
        raise NotConnectedError(
            f"restricted edges reach {len(tree) + 1} of {g.n} vertices; {missing} is unreachable"
        )
    return sorted(tree)


def min_degree(g: Graph) -> int:
    """Minimum vertex degree."""
    return min(len(nbrs) for nbrs in g.adjacency)


def is_bipartite(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Two-color g by BFS; return (True, colors in {1, 2}) or (False, None)."""
    side = [0] * g.n
    for start in range(g.n):
        if side[start]:
            continue
        side[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not side[v]:
                    side[v] = 3 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return False, None
    return True, tuple(side)


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique found by greedy extension from every start vertex.

    Candidates are tried by descending degree, then ascending index.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    rank = {v: i for i, v in enumerate(order)}
    best: list[int] = []
    for start in order:
        if g.degree(start) + 1 <= len(best):
            continue
        clique = [start]
        candidates = sorted(g.adjacency[start], key=rank.__getitem__)
        while candidates:
            pick = candidates[0]
            clique.append(pick)
            pick_nbrs = set(g.adjacency[pick])
            candidates = [w for w in candidates[1:] if w in pick_nbrs]
        if len(clique) > len(best):
            best = clique
    return sorted(best)
