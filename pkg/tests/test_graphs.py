from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from eqaoa.errors import GraphError, GraphParseError
from eqaoa.graphs import (
    BUILTIN_GRAPHS,
    Graph,
    adjacent_edge_pairs,
    builtin_graph,
    degrees,
    max_degree,
    parse_edge_list,
    render_edge_list,
)


def test_gamma1_edges():
    g = builtin_graph("gamma1")
    assert g.num_vertices == 5
    assert set(g.edges) == {(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (3, 4)}


def test_frakg_is_four_cycle():
    g = builtin_graph("frakG")
    assert g.num_vertices == 4
    assert set(g.edges) == {(0, 1), (1, 2), (2, 3), (0, 3)}
    assert degrees(g) == [2, 2, 2, 2]


def test_gamma6_is_star():
    g = builtin_graph("gamma6")
    assert g.num_vertices == 9
    assert set(g.edges) == {(0, k) for k in range(1, 9)}


def test_unknown_name_lists_valid_ones():
    with pytest.raises(GraphError, match="gamma1"):
        builtin_graph("petersen")


def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.num_vertices == 3 and g.num_edges == 2


def test_parse_declared_count():
    g = parse_edge_list("n 5\n0 1")
    assert g.num_vertices == 5 and g.num_edges == 1


def test_parse_merges_reversed_duplicates_and_comments():
    g = parse_edge_list("# triangle\n0 1\n1 0  # again\n\n1 2\n2 0\n")
    assert g.edges == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize(
    "text, line",
    [("0 0", 1), ("0 1\n2 -1", 2), ("0 1\nfoo bar", 2), ("0 1 2", 1), ("n 2\n0 5", 2)],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphParseError) as err:
        parse_edge_list(text)
    assert err.value.line == line


def test_graph_rejects_parallel_edges():
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 0)))


def test_graph_rejects_out_of_range():
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))


@pytest.mark.parametrize("name", BUILTIN_GRAPHS)
def test_render_round_trip(name):
    g = builtin_graph(name)
    assert parse_edge_list(render_edge_list(g)) == g


def test_gamma1_adjacent_pairs():
    # degrees 4,1,2,3,2 -> 6 + 0 + 1 + 3 + 1
    assert len(adjacent_edge_pairs(builtin_graph("gamma1"))) == 11


def test_small_pair_counts():
    assert len(adjacent_edge_pairs(parse_edge_list("0 1\n1 2"))) == 1
    assert adjacent_edge_pairs(Graph(4, ())) == []


def test_max_degree():
    assert max_degree(builtin_graph("gamma1")) == 4
    assert max_degree(builtin_graph("gamma6")) == 8
    assert max_degree(parse_edge_list("0 1")) == 1


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 10))
    all_edges = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(all_edges), unique=True)) if all_edges else []
    return Graph(n, tuple(chosen))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_pair_count_double_counting(g):
    assert len(adjacent_edge_pairs(g)) == sum(comb(k, 2) for k in degrees(g))
    for i, j in adjacent_edge_pairs(g):
        assert i < j
        assert len(set(g.edges[i]) & set(g.edges[j])) == 1


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_random_round_trip(g):
    assert parse_edge_list(render_edge_list(g)) == g
