"""Pydantic schemas for the JSON documents the CLI reads and writes."""

from typing import Annotated, Literal, Optional

from pydantic import BaseModel, Field

Color = Annotated[int, Field(ge=1)]
Vertex = Annotated[int, Field(ge=0)]
EdgePair = tuple[Vertex, Vertex]


class TraceStepOutput(BaseModel):
    """One Kempe swap performed by the solver."""

    case: Literal["free-color", "saturated"] = Field(..., description="Recoloring rule used")
    edge: EdgePair = Field(..., description="Cut edge (inside, outside) that was repaired")
    color: int = Field(..., description="Color swapped with the outside endpoint's color")
    component_size: int = Field(..., description="Size of the swapped Kempe chain")
    largest_before: int = Field(..., description="Largest q-component size before the swap")


class SolutionOutput(BaseModel):
    """Result of `bbt solve`; also the input of `bbt verify`."""

    n: int = Field(..., ge=1, description="Vertex count")
    q: int = Field(..., ge=1, description="Required separation on tree edges")
    k_achieved: int = Field(..., description="Largest color used")
    k_target: int = Field(..., description="max(t, ceil(t/2) + q) for the starting color count t")
    colors: list[Color] = Field(..., description="1-based color per 0-based vertex")
    tree: list[EdgePair] = Field(..., description="Spanning tree edges, u < v, sorted")
    iterations: int = Field(..., ge=0, description="Kempe swaps performed")
    mode: Literal["exact", "heuristic"] = Field(..., description="How the start coloring was found")
    trace: Optional[list[TraceStepOutput]] = Field(default=None, description="Swap log")

    model_config = {
        "json_schema_extra": {
            "example": {
                "n": 4,
                "q": 2,
                "k_achieved": 4,
                "k_target": 4,
                "colors": [1, 2, 3, 4],
                "tree": [[0, 2], [0, 3], [1, 3]],
                "iterations": 0,
                "mode": "exact",
            }
        }
    }


class VerifyOutput(BaseModel):
    """Result of `bbt verify`."""

    proper: bool = Field(..., description="No monochromatic edge")
    spanning_tree: bool = Field(..., description="Tree edges form a spanning tree of the graph")
    backbone_ok: bool = Field(..., description="Every tree edge has color gap >= q")
    k_used: int = Field(..., description="Largest color used")

    model_config = {
        "json_schema_extra": {
            "example": {"proper": True, "spanning_tree": True, "backbone_ok": False, "k_used": 3}
        }
    }


class OracleOutput(BaseModel):
    """Result of the `bbt oracle` subcommands."""

    value: int = Field(..., description="Exact value computed by exhaustive search")
    witness_colors: list[Color] = Field(..., description="Coloring attaining the value")
    tree: Optional[list[EdgePair]] = Field(default=None, description="Witness spanning tree")
    nodes: int = Field(..., description="Search nodes explored")
    trees: Optional[int] = Field(default=None, description="Spanning trees examined")


class CheckFailure(BaseModel):
    """A graph on which the solver disagreed with the formula or the oracle."""

    n: int
    edges: list[EdgePair]
    q: int
    reason: str
    k_achieved: Optional[int] = None
    expected: Optional[int] = None


class GraphCount(BaseModel):
    n: int
    graphs: int


class EnumerateCheckOutput(BaseModel):
    """Summary of `bbt enumerate-check`."""

    n_max: int
    q: list[int]
    graphs_checked: int = Field(..., description="Connected graphs with 2 <= n <= n_max")
    solves: int = Field(..., description="Solver runs (graphs times separations)")
    oracle_checked: int = Field(..., description="Solver runs cross-checked against the oracle")
    by_n: list[GraphCount]
    failures: list[CheckFailure]
