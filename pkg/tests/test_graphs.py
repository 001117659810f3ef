import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import ideal
from ntfkit import BudgetExceededError, InvalidIdealError, ParseError
from ntfkit.decomposition import alexander_dual
from ntfkit.graphs import (
    Graph, all_labeled_trees, build_graph, cover_ideal, cover_ideal_by_intersection, cycle_graph,
    dominating_ideal, domination_number, edge_ideal, format_graph_file, is_bipartite, is_tree,
    minimal_dominating_sets, neighborhood_ideal, parse_graph_file, path_graph, random_tree,
    star_graph,
)


def test_families():
    assert cycle_graph(5).edge_list() == [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
    assert path_graph(2).edge_list() == [(1, 2)]
    T = random_tree(7, seed=1)
    assert len(T.edges) == 6 and is_tree(T)
    assert random_tree(7, seed=1) == T
    assert build_graph("star", 4) == star_graph(4)
    with pytest.raises(ValueError):
        build_graph("wheel", 4)


def test_closed_neighborhoods():
    assert cycle_graph(5).closed_neighborhood(1) == {5, 1, 2}
    assert star_graph(5).closed_neighborhood(1) == set(range(1, 6))
    assert Graph.from_edges(3, [(1, 2)]).closed_neighborhood(3) == {3}


def test_edge_and_cover_ideals():
    G = path_graph(2)
    assert edge_ideal(G) == ideal(2, "x1*x2")
    assert cover_ideal(G) == ideal(2, "x1, x2")
    C5 = cycle_graph(5)
    assert cover_ideal(C5) == ideal(5, "x1*x2*x4, x2*x3*x5, x1*x3*x4, x2*x4*x5, x1*x3*x5")
    assert cover_ideal(C5) == cover_ideal_by_intersection(C5)
    with pytest.raises(InvalidIdealError):
        edge_ideal(Graph.from_edges(2, []))


def test_neighborhood_ideals():
    assert neighborhood_ideal(path_graph(2)) == ideal(2, "x1*x2")
    assert neighborhood_ideal(path_graph(4)) == ideal(4, "x1*x2, x3*x4")
    assert neighborhood_ideal(cycle_graph(5)) == ideal(
        5, "x1*x2*x5, x1*x2*x3, x2*x3*x4, x3*x4*x5, x1*x4*x5")
    assert len(neighborhood_ideal(cycle_graph(5))) == 5


class TestDomination:
    def test_single_edge(self):
        G = path_graph(2)
        assert minimal_dominating_sets(G) == [{1}, {2}]
        assert dominating_ideal(G) == ideal(2, "x1, x2")
        assert domination_number(G) == 1

    def test_path_four(self):
        G = path_graph(4)
        assert minimal_dominating_sets(G) == [{1, 3}, {1, 4}, {2, 3}, {2, 4}]
        assert dominating_ideal(G, verify=True) == ideal(4, "x1*x3, x1*x4, x2*x3, x2*x4")
        assert domination_number(G) == 2

    def test_star(self):
        G = star_graph(4)
        assert dominating_ideal(G) == ideal(4, "x1, x2*x3*x4")
        assert domination_number(G) == 1

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            minimal_dominating_sets(path_graph(17))


def test_bipartite_and_tree():
    assert not is_bipartite(cycle_graph(5))
    assert is_bipartite(path_graph(4)) and is_tree(path_graph(4))
    assert is_bipartite(cycle_graph(4)) and not is_tree(cycle_graph(4))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)])
def test_labeled_tree_count(n, count):
    trees = list(all_labeled_trees(n))
    assert len(trees) == count and len(set(trees)) == count
    assert all(is_tree(T) for T in trees)


class TestGraphFile:
    def test_round_trip(self):
        G = cycle_graph(5)
        assert parse_graph_file(format_graph_file(G)) == G

    def test_comments(self, fixtures):
        assert parse_graph_file((fixtures / "c5.graph").read_text()) == cycle_graph(5)

    @pytest.mark.parametrize("text, match", [
        ("graph 3\nedge 1 1", "loop"),
        ("graph 3\nedge 1 4", "outside"),
        ("graph 3\nedge 1 2\nedge 2 1", "duplicate"),
        ("edge 1 2", "graph <n>"),
        ("graph 3\nedge 1", "edge <u> <v>"),
    ])
    def test_errors(self, text, match):
        with pytest.raises(ParseError, match=match):
            parse_graph_file(text)


def test_invalid_edges():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 2), (2, 1)])


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_dominating_sets_match_oracle(G):
    assert set(minimal_dominating_sets(G)) == set(oracles.dominating_sets(G.n, G.edge_list()))


@given(graphs())
def test_dominating_ideal_is_dual_of_neighborhood_ideal(G):
    assert dominating_ideal(G) == alexander_dual(neighborhood_ideal(G))


@given(graphs(max_n=7))
def test_cover_ideal_two_ways(G):
    if G.edges:
        assert cover_ideal(G) == cover_ideal_by_intersection(G)
