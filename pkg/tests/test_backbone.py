"""Tests for the backbone construction and verifier."""

import pytest

from src.bbtree.errors import (
    ColorOutOfRangeError,
    ImproperColoringError,
    InvalidParameterError,
    NotConnectedInputError,
    SizeMismatchError,
    TooSmallError,
)
from src.bbtree.services.backbone import (
    Palette,
    SolveMode,
    SwapCase,
    best_tree_value_q2,
    connect_q_subgraph,
    dead_colors,
    extract_backbone,
    forbidden_interval,
    initial_palette_coloring,
    naive_upper_bound,
    q_subgraph,
    solve,
    target_k,
    verify_backbone_coloring,
)
from src.bbtree.services.coloring import Coloring, exact_chromatic, is_proper
from src.bbtree.services.generators import generate
from src.bbtree.services.graph import from_edges, is_connected

SINGLE_EDGE = from_edges(2, [(0, 1)])


def test_forbidden_interval():
    """Test colors too close to a given color."""
    assert forbidden_interval(3, 2, 5) == frozenset({2, 3, 4})
    assert forbidden_interval(1, 3, 4) == frozenset({1, 2, 3})
    assert forbidden_interval(4, 1, 4) == frozenset({4})
    with pytest.raises(ColorOutOfRangeError):
        forbidden_interval(6, 2, 5)


def test_dead_colors():
    """Test colors that cannot sit on a backbone edge."""
    assert dead_colors(4, 3) == frozenset({2, 3})
    assert dead_colors(5, 2) == frozenset()
    assert dead_colors(3, 3) == frozenset({1, 2, 3})


def test_target_k():
    """Test the optimal bound formula."""
    assert target_k(4, 2) == 4
    assert target_k(2, 5) == 6
    assert target_k(3, 2) == 4
    assert target_k(1, 3) == 4
    with pytest.raises(InvalidParameterError):
        target_k(3, 0)


def test_bounds_for_comparison():
    """Test the spread bound and the q = 2 closed form."""
    assert naive_upper_bound(3, 2) == 5
    assert naive_upper_bound(4, 1) == 4
    assert best_tree_value_q2(2) == 3
    assert best_tree_value_q2(3) == 4
    assert best_tree_value_q2(4) == 4
    assert best_tree_value_q2(7) == 7


def test_palette_blocks():
    """Test the palette geometry."""
    palette = Palette.build(3, 2)
    assert (palette.k, palette.x, palette.kprime) == (4, 2, 1)
    assert list(palette.low_block) == [1, 2]
    assert list(palette.gap_block) == [3]
    assert list(palette.high_block) == [4]
    assert not palette.is_palette_color(3)
    for t in range(1, 9):
        for q in range(1, 6):
            p = Palette.build(t, q)
            assert len(p.low_block) + len(p.high_block) == t


def test_q_subgraph(k3):
    """Test edges with large enough gaps."""
    assert q_subgraph(k3, Coloring.from_colors([1, 3, 5]), 2) == [(0, 1), (0, 2), (1, 2)]
    assert q_subgraph(k3, Coloring.from_colors([1, 2, 3]), 2) == [(0, 2)]
    assert q_subgraph(k3, Coloring.from_colors([1, 2, 3]), 1) == k3.edges()


def test_initial_palette_coloring():
    """Test the upper color half moves to the top of the palette."""
    shifted, palette = initial_palette_coloring(Coloring.from_colors([1, 2, 3]), 2)
    assert shifted.colors == (1, 2, 4)
    assert palette.k == 4
    shifted, _ = initial_palette_coloring(Coloring.from_colors([1, 2]), 3)
    assert shifted.colors == (1, 4)


def test_connect_single_edge():
    """Test an already connected q-subgraph needs no swaps."""
    result = connect_q_subgraph(SINGLE_EDGE, Coloring.from_colors([1, 2]), 3)
    assert result.coloring.colors == (1, 4)
    assert result.trace == []


@pytest.mark.parametrize("family,n,q,k", [("cycle", 5, 2, 4), ("complete", 4, 2, 4)])
def test_connect_q_subgraph(family, n, q, k):
    """Test the construction connects the q-subgraph within the palette."""
    g = generate(family, n=n)
    start = exact_chromatic(g).witness
    result = connect_q_subgraph(g, start, q)
    assert result.palette.k == k
    assert result.coloring.max_color <= k
    assert is_proper(g, result.coloring)
    assert is_connected(g, q_subgraph(g, result.coloring, q))
    assert len(result.trace) <= g.n - 1
    sizes = [step.largest_before for step in result.trace]
    assert sizes == sorted(set(sizes))
    for step in result.trace:
        assert step.case in (SwapCase.FREE_COLOR, SwapCase.SATURATED)
        assert result.palette.is_palette_color(step.color)


@pytest.mark.parametrize(
    "n,edges,colors,expected_color,final",
    [
        # palette 1..3 | 6..7, k = 7 lies outside [3]_4
        (3, [(0, 1), (0, 2)], [3, 5, 4], 7, (3, 7, 7)),
        # k = 7 lies inside [6]_4, so the far end is 1
        (4, [(0, 1), (0, 2), (1, 3)], [4, 1, 3, 5], 1, (6, 1, 1, 7)),
    ],
)
def test_connect_saturated_swap(n, edges, colors, expected_color, final):
    """Test a cut edge blocking the whole palette moves the outside end to k or 1."""
    g = from_edges(n, edges)
    result = connect_q_subgraph(g, Coloring.from_colors(colors), 4)
    assert result.palette.k == 7
    assert [(step.case, step.edge, step.color) for step in result.trace] == [
        (SwapCase.SATURATED, (0, 2), expected_color)
    ]
    assert result.coloring.colors == final
    assert is_proper(g, result.coloring)
    assert is_connected(g, q_subgraph(g, result.coloring, 4))


def test_connect_q_subgraph_errors(k3):
    """Test invalid inputs to the construction."""
    with pytest.raises(TooSmallError):
        connect_q_subgraph(from_edges(1, []), Coloring.from_colors([1]), 2)
    with pytest.raises(SizeMismatchError):
        connect_q_subgraph(k3, Coloring.from_colors([1, 2]), 2)
    with pytest.raises(NotConnectedInputError):
        connect_q_subgraph(from_edges(3, [(0, 1)]), Coloring.from_colors([1, 2, 1]), 2)
    with pytest.raises(ImproperColoringError):
        connect_q_subgraph(k3, Coloring.from_colors([1, 1, 2]), 2)


def test_extract_backbone(k3):
    """Test the tree drawn from the q-subgraph."""
    assert extract_backbone(k3, Coloring.from_colors([1, 3, 5]), 2) == [(0, 1), (0, 2)]
    assert extract_backbone(SINGLE_EDGE, Coloring.from_colors([1, 4]), 3) == [(0, 1)]


def test_extract_backbone_from_cycle(c5):
    """Test the C5 tree has four edges with gaps of at least 2."""
    result = connect_q_subgraph(c5, exact_chromatic(c5).witness, 2)
    tree = extract_backbone(c5, result.coloring, 2)
    assert len(tree) == 4
    assert all(abs(result.coloring[u] - result.coloring[v]) >= 2 for u, v in tree)


def test_verify_backbone_coloring(k3):
    """Test verification reports."""
    tree = [(0, 1), (1, 2)]
    report = verify_backbone_coloring(k3, tree, Coloring.from_colors([1, 4, 2]), 2)
    assert report.ok
    assert report.k_used == 4

    report = verify_backbone_coloring(k3, tree, Coloring.from_colors([1, 3, 2]), 2)
    assert report.proper
    assert report.spanning_tree
    assert not report.backbone_ok

    report = verify_backbone_coloring(k3, [(0, 1)], Coloring.from_colors([1, 4, 2]), 2)
    assert not report.spanning_tree


def test_verify_rejects_non_tree_edges(k3, path3):
    """Test cycles, foreign pairs and short colorings."""
    colors = Coloring.from_colors([1, 3, 5])
    assert not verify_backbone_coloring(path3, [(0, 1), (0, 2)], colors, 2).spanning_tree
    assert not verify_backbone_coloring(k3, [(0, 1), (1, 0)], colors, 2).spanning_tree
    report = verify_backbone_coloring(k3, [(0, 1), (1, 2)], Coloring.from_colors([1, 3]), 2)
    assert not report.proper
    assert not report.ok


@pytest.mark.parametrize(
    "family,params,q,expected",
    [
        ("complete", {"n": 4}, 2, 4),
        ("cycle", {"n": 6}, 7, 8),
        ("petersen", {}, 3, 5),
        ("cycle", {"n": 5}, 3, 5),
        ("complete", {"n": 5}, 1, 5),
    ],
)
def test_solve(family, params, q, expected):
    """Test exact solves reach max(chi, ceil(chi/2) + q)."""
    g = generate(family, **params)
    result = solve(g, q)
    assert result.k_achieved == expected
    assert result.k_target == expected
    assert verify_backbone_coloring(g, result.tree, result.coloring, q).ok
    assert result.iterations == len(result.trace)


def test_solve_single_vertex():
    """Test a one-vertex graph uses one color and an empty tree."""
    result = solve(from_edges(1, []), 3)
    assert result.coloring.colors == (1,)
    assert result.tree == []
    assert result.k_achieved == 1
    assert result.k_target == 4


def test_solve_heuristic_mode(petersen):
    """Test heuristic mode reports the DSATUR-based bound."""
    result = solve(petersen, 2, mode="heuristic")
    assert result.mode is SolveMode.HEURISTIC
    assert result.k_target == target_k(result.t, 2)
    assert result.k_achieved <= result.k_target
    assert verify_backbone_coloring(petersen, result.tree, result.coloring, 2).ok


def test_solve_rejects_disconnected_graph():
    """Test disconnected input."""
    with pytest.raises(NotConnectedInputError):
        solve(from_edges(3, [(0, 1)]), 2)
    with pytest.raises(InvalidParameterError):
        solve(SINGLE_EDGE, 0)


def test_solve_is_deterministic(petersen):
    """Test repeated solves give identical output."""
    first = solve(petersen, 3)
    second = solve(petersen, 3)
    assert first.coloring == second.coloring
    assert first.tree == second.tree
    assert first.trace == second.trace
