"""Proper colorings, chromatic number search and Kempe-chain recoloring."""

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

from ..errors import (
    BudgetExceededError,
    InvalidColorError,
    InvalidParameterError,
    NotAKempeComponentError,
    SameColorError,
    SizeMismatchError,
    VertexOutOfRangeError,
)
from ..utils.logging import get_logger
from .graph import Graph, VertexSet, greedy_clique

logger = get_logger(__name__)


@dataclass(frozen=True)
class Coloring:
    """Vertex colors in 1..k, indexed by 0-based vertex."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidColorError(f"palette bound must be at least 1, got {self.k}")
        for v, color in enumerate(self.colors):
            if not 1 <= color <= self.k:
                raise InvalidColorError(f"vertex {v} has color {color} outside 1..{self.k}")

    @classmethod
    def from_colors(cls, colors: Iterable[int], k: Optional[int] = None) -> "Coloring":
        """Wrap a color sequence; k defaults to the largest color used."""
        values = tuple(int(c) for c in colors)
        return cls(colors=values, k=k if k is not None else max(values, default=1))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)

    def color_class(self, i: int) -> VertexSet:
        return frozenset(v for v, color in enumerate(self.colors) if color == i)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


@dataclass(frozen=True)
class ChromaticResult:
    """Exact chromatic number with a witness using colors 1..chi."""

    chi: int
    witness: Coloring
    nodes: int = 0


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge is monochromatic."""
    if c.n != g.n:
        raise SizeMismatchError(f"coloring covers {c.n} vertices, graph has {g.n}")
    return all(c.colors[u] != c.colors[v] for u, v in g.edges())


def dsatur(g: Graph) -> Coloring:
    """Greedy DSATUR coloring.

    Picks the uncolored vertex of highest saturation, then highest degree, then lowest
    index, and gives it the smallest color unused by its neighbors.
    """
    colors = [0] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]

    for _ in range(g.n):
        best_vertex = -1
        best_key = (-1, -1)
        for v in range(g.n):
            if colors[v]:
                continue
            key = (len(neighbor_colors[v]), g.degree(v))
            if key > best_key:
                best_vertex, best_key = v, key

        color = 1
        while color in neighbor_colors[best_vertex]:
            color += 1
        colors[best_vertex] = color
        for w in g.neighbors(best_vertex):
            neighbor_colors[w].add(color)

    return Coloring.from_colors(colors)


class _ChromaticSearch:
    """Depth-first branch and bound in DSATUR order.

    Color 0 marks an uncolored vertex; counts[v][c] is the number of neighbors of v
    holding color c.
    """

    def __init__(self, g: Graph, upper: Coloring, lower: int, budget: Optional[int]):
        self.g = g
        self.best = upper.max_color
        self.best_colors = list(upper.colors)
        self.lower = lower
        self.budget = budget
        self.nodes = 0
        self.colors = [0] * g.n
        self.counts = [[0] * (self.best + 2) for _ in range(g.n)]
        self.saturation = [0] * g.n

    def _assign(self, v: int, color: int) -> None:
        self.colors[v] = color
        for w in self.g.neighbors(v):
            if self.counts[w][color] == 0:
                self.saturation[w] += 1
            self.counts[w][color] += 1

    def _unassign(self, v: int, color: int) -> None:
        self.colors[v] = 0
        for w in self.g.neighbors(v):
            self.counts[w][color] -= 1
            if self.counts[w][color] == 0:
                self.saturation[w] -= 1

    def _pick_vertex(self) -> int:
        best_vertex = -1
        best_key = (-1, -1)
        for v in range(self.g.n):
            if self.colors[v]:
                continue
            key = (self.saturation[v], self.g.degree(v))
            if key > best_key:
                best_vertex, best_key = v, key
        return best_vertex

    def run(self) -> None:
        self._search(colored=0, used=0)

    def _search(self, colored: int, used: int) -> bool:
        """Return True once the lower bound is met and the search can stop."""
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceededError(
                f"exact chromatic search exceeded {self.budget} nodes (best so far {self.best})"
            )

        if colored == self.g.n:
            self.best = used
            self.best_colors = self.colors.copy()
            logger.debug("Improved coloring found", colors=used, nodes=self.nodes)
            return used <= self.lower

        v = self._pick_vertex()
        for color in range(1, min(used + 1, self.best - 1) + 1):
            if self.counts[v][color]:
                continue
            self._assign(v, color)
            done = self._search(colored + 1, max(used, color))
            self._unassign(v, color)
            if done:
                return True
        return False


def exact_chromatic(g: Graph, budget: Optional[int] = None) -> ChromaticResult:
    """Exact chromatic number by branch and bound.

    The DSATUR coloring is the starting upper bound and a greedy clique the lower
    bound; a branch is cut as soon as it would need as many colors as the best known.
    """
    upper = dsatur(g)
    lower = len(greedy_clique(g))
    if upper.max_color == lower:
        return ChromaticResult(chi=lower, witness=upper, nodes=0)

    search = _ChromaticSearch(g, upper, lower, budget)
    search.run()
    witness = Coloring.from_colors(search.best_colors)
    logger.debug(
        "Exact chromatic number computed",
        n=g.n,
        chi=search.best,
        dsatur=upper.max_color,
        clique=lower,
        nodes=search.nodes,
    )
    return ChromaticResult(chi=search.best, witness=witness, nodes=search.nodes)


def kempe_component(g: Graph, c: Coloring, v: int, j: int) -> VertexSet:
    """Component containing v of the subgraph induced by color classes j and c(v)."""
    if c.n != g.n:
        raise SizeMismatchError(f"coloring covers {c.n} vertices, graph has {g.n}")
    if not 0 <= v < g.n:
        raise VertexOutOfRangeError(f"vertex {v} outside 0..{g.n - 1}")
    if not 1 <= j <= c.k:
        raise InvalidColorError(f"color {j} outside 1..{c.k}")
    own = c.colors[v]
    if j == own:
        raise SameColorError(f"vertex {v} already has color {j}")

    pair = (own, j)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen and c.colors[w] in pair:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def kempe_swap(g: Graph, c: Coloring, component: Iterable[int], a: int, b: int) -> Coloring:
    """Exchange colors a and b on a full Kempe component."""
    members = frozenset(component)
    if a == b:
        raise SameColorError(f"cannot swap color {a} with itself")
    if not members:
        raise NotAKempeComponentError("empty component")
    for v in members:
        if not 0 <= v < c.n:
            raise NotAKempeComponentError(f"vertex {v} outside 0..{c.n - 1}")
        if c.colors[v] not in (a, b):
            raise NotAKempeComponentError(f"vertex {v} has color {c.colors[v]}, not {a} or {b}")

    anchor = min(members)
    other = b if c.colors[anchor] == a else a
    if kempe_component(g, c, anchor, other) != members:
        raise NotAKempeComponentError(
            f"vertex set is not the full {a}/{b} component containing {anchor}"
        )

    swapped = list(c.colors)
    for v in members:
        swapped[v] = b if swapped[v] == a else a
    return Coloring(colors=tuple(swapped), k=c.k)


def spread_coloring(c: Coloring, q: int) -> Coloring:
    """Map color i to q*(i-1)+1 so every pair of distinct colors is at least q apart."""
    if q < 1:
        raise InvalidParameterError(f"separation must be at least 1, got {q}")
    t = c.max_color
    return Coloring(colors=tuple(q * (i - 1) + 1 for i in c.colors), k=q * (t - 1) + 1)

