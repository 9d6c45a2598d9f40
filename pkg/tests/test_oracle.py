"""Tests for the brute-force oracle."""

from itertools import combinations

import networkx as nx
import pytest

from src.bbtree.errors import (
    CapExceededError,
    DegreeZeroError,
    EdgeNotInGraphError,
    NotConnectedError,
    TooLargeError,
    TooSmallError,
)
from src.bbtree.services.backbone import target_k
from src.bbtree.services.coloring import exact_chromatic, is_proper
from src.bbtree.services.generators import generate
from src.bbtree.services.graph import from_edges
from src.bbtree.services.oracle import (
    BackboneInstance,
    bbc_exact,
    best_tree_exact,
    chromatic_number_bruteforce,
    count_spanning_trees,
    enumerate_spanning_trees,
    lower_bound_check,
    search_floor,
    worst_tree_exact,
)


def _gaps_hold(inst, colors, q):
    backbone = set(inst.h)
    return all(
        abs(colors[u] - colors[v]) >= (q if (u, v) in backbone else 1) for u, v in inst.g.edges()
    )


def test_bbc_exact_triangle(k3):
    """Test K3 with a path backbone and with a full backbone."""
    path = BackboneInstance.of(k3, [(0, 1), (1, 2)])
    result = bbc_exact(path, 2)
    assert result.value == 4
    assert result.witness.colors == (1, 4, 2)
    assert _gaps_hold(path, result.witness.colors, 2)

    full = BackboneInstance.of(k3, k3.edges())
    result = bbc_exact(full, 2)
    assert result.value == 5
    assert result.witness.colors == (1, 3, 5)


def test_bbc_exact_q1_is_chromatic_number(petersen):
    """Test q = 1 reduces to ordinary coloring."""
    inst = BackboneInstance.of(petersen, petersen.edges()[:5])
    assert bbc_exact(inst, 1).value == 3


def test_bbc_exact_full_backbone_within_spread_bound():
    """Test the full backbone at q = 2 fits under 2 chi - 1."""
    for family, params in [("cycle", {"n": 5}), ("complete", {"n": 4}), ("wheel", {"n": 6})]:
        g = generate(family, **params)
        chi = exact_chromatic(g).chi
        assert bbc_exact(BackboneInstance.of(g, g.edges()), 2).value <= 2 * chi - 1


def test_bbc_exact_monotone_in_backbone(c5):
    """Test adding backbone edges never lowers the value."""
    edges = c5.edges()
    values = [bbc_exact(BackboneInstance.of(c5, edges[:i]), 3).value for i in range(6)]
    assert values == sorted(values)


def test_backbone_instance_validation(k3):
    """Test backbone edges must belong to the graph."""
    inst = BackboneInstance.of(k3, [(2, 1), (1, 0)])
    assert inst.h == ((0, 1), (1, 2))
    with pytest.raises(EdgeNotInGraphError):
        BackboneInstance.of(from_edges(3, [(0, 1)]), [(0, 2)])


def test_search_floor(k3):
    """Test the clique and backbone floor."""
    assert search_floor(BackboneInstance.of(k3, []), 5) == 3
    assert search_floor(BackboneInstance.of(k3, [(0, 1)]), 5) == 6


def test_bbc_exact_disconnected_graph():
    """Test two separate backbone edges are searched component by component."""
    g = from_edges(4, [(0, 1), (2, 3)])
    result = bbc_exact(BackboneInstance.of(g, g.edges()), 2)
    assert result.value == 3
    assert result.witness.colors == (1, 3, 1, 3)


def test_bbc_exact_size_limit():
    """Test the vertex cap."""
    g = generate("path", n=13)
    with pytest.raises(TooLargeError):
        bbc_exact(BackboneInstance.of(g, g.edges()), 2)


def test_lower_bound_check(k3):
    """Test the lower bound on spanning backbones without isolated vertices."""
    assert lower_bound_check(BackboneInstance.of(k3, [(0, 1), (1, 2)]), 2, 3)
    c4 = generate("cycle", n=4)
    assert lower_bound_check(BackboneInstance.of(c4, [(0, 1), (2, 3)]), 3, 2)
    assert bbc_exact(BackboneInstance.of(c4, [(0, 1), (2, 3)]), 3).value >= target_k(2, 3)
    star = generate("star", n=4)
    with pytest.raises(DegreeZeroError):
        lower_bound_check(BackboneInstance.of(star, [(0, 1)]), 2, 2)


@pytest.mark.parametrize(
    "family,params,count",
    [
        ("cycle", {"n": 5}, 5),
        ("complete", {"n": 4}, 16),
        ("path", {"n": 6}, 1),
        ("petersen", {}, 2000),
    ],
)
def test_count_spanning_trees(family, params, count):
    """Test spanning tree counts."""
    assert count_spanning_trees(generate(family, **params)) == count


def test_enumerate_spanning_trees_order_and_validity(k4):
    """Test trees come out once each in lexicographic order."""
    trees = list(enumerate_spanning_trees(k4))
    assert trees == sorted(trees)
    assert len({tuple(t) for t in trees}) == 16
    assert trees[0] == [(0, 1), (0, 2), (0, 3)]
    for tree in trees:
        assert nx.is_tree(nx.Graph(tree))


def test_enumerate_spanning_trees_matches_subset_filter():
    """Test against filtering every (n-1)-edge subset."""
    for seed in range(4):
        g = generate("gnp", n=6, p=0.6, seed=seed)
        reference = nx.Graph(g.edges())
        reference.add_nodes_from(range(g.n))
        if not nx.is_connected(reference):
            continue
        expected = [
            list(subset)
            for subset in combinations(g.edges(), g.n - 1)
            if nx.is_tree(nx.Graph(list(subset)))
            and nx.Graph(list(subset)).number_of_nodes() == g.n
        ]
        assert list(enumerate_spanning_trees(g)) == expected


def test_enumerate_spanning_trees_errors(k4):
    """Test disconnected input and the tree cap."""
    with pytest.raises(NotConnectedError):
        list(enumerate_spanning_trees(from_edges(3, [(0, 1)])))
    with pytest.raises(CapExceededError):
        list(enumerate_spanning_trees(k4, cap=10))


@pytest.mark.parametrize(
    "family,params,q,expected",
    [("complete", {"n": 4}, 2, 4), ("cycle", {"n": 5}, 3, 5), ("path", {"n": 2}, 4, 5)],
)
def test_best_tree_exact(family, params, q, expected):
    """Test the minimum over spanning trees."""
    g = generate(family, **params)
    result = best_tree_exact(g, q)
    assert result.value == expected
    assert len(result.tree) == g.n - 1
    inst = BackboneInstance.of(g, result.tree)
    assert _gaps_hold(inst, result.coloring.colors, q)
    assert result.coloring.max_color <= expected


def test_worst_tree_exact(k4):
    """Test the maximum over spanning trees is attained by a star."""
    result = worst_tree_exact(k4, 2)
    assert result.value == 5
    assert result.tree == [(0, 1), (0, 2), (0, 3)]
    assert result.trees_examined == 16


def test_tree_search_errors(k4):
    """Test size checks on the tree searches."""
    with pytest.raises(TooSmallError):
        best_tree_exact(from_edges(1, []), 2)
    with pytest.raises(TooLargeError):
        best_tree_exact(k4, 2, max_vertices=3)
    with pytest.raises(CapExceededError):
        worst_tree_exact(k4, 2, cap=10)


@pytest.mark.parametrize(
    "family,params,chi",
    [
        ("cycle", {"n": 5}, 3),
        ("petersen", {}, 3),
        ("complete", {"n": 5}, 5),
        ("wheel", {"n": 6}, 4),
    ],
)
def test_chromatic_number_bruteforce(family, params, chi):
    """Test plain backtracking chromatic numbers."""
    g = generate(family, **params)
    result = chromatic_number_bruteforce(g)
    assert result.chi == chi
    assert is_proper(g, result.witness)
    assert result.nodes > 0
