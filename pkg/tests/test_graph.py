from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from kproper.errors import DomainError, FormatError
from kproper.extremal import apex_counterexample, join_tightness
from kproper.graph import (
    average_degree,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    join,
    min_degree,
    path_graph,
    remove_vertices,
    star_graph,
)


def test_triangle_from_edges():
    g = from_edge_list([(0, 1), (1, 2), (2, 0)])
    assert g.n == 3 and g.m == 3
    assert [g.degree(v) for v in g.vertices()] == [2, 2, 2]


def test_declared_n_gives_isolated_vertices():
    g = from_edge_list([], n=5)
    assert g.n == 5 and g.m == 0 and min_degree(g) == 0


def test_duplicate_edges_collapse():
    g = from_edge_list([(0, 1), (1, 0), (0, 1)])
    assert g.n == 2 and list(g.edges()) == [(0, 1)]


def test_self_loop_reports_position():
    with pytest.raises(FormatError) as err:
        from_edge_list([(0, 1), (2, 2)])
    assert err.value.line == 2


def test_string_vertices_keep_labels():
    g = from_edge_list([("b", "a"), ("a", "c")])
    assert g.labels == ("a", "b", "c")
    assert g.has_edge(0, 1) and g.has_edge(0, 2) and not g.has_edge(1, 2)


def test_induced_clique_and_cycle_edge():
    assert induced_subgraph(complete_graph(4), [0, 1, 2]) == complete_graph(3)
    h = induced_subgraph(cycle_graph(5), [2, 3])
    assert h.n == 2 and h.m == 1


def test_induced_out_of_range():
    with pytest.raises(DomainError):
        induced_subgraph(complete_graph(3), [0, 5])


def test_induced_apex_clique_plus_apex():
    # apex(2,4,2): cliques {0..3}, {4..7}, apex 8 adjacent to 0 and 4
    g = apex_counterexample(2, 4, 2)
    h = induced_subgraph(g, [0, 1, 2, 3, 8])
    assert h.m == 6 + 1
    assert h.origin == (0, 1, 2, 3, 8)
    assert h.degree(4) == 1


def test_labels_follow_nested_subgraphs():
    g = from_edge_list([("x", "y"), ("y", "z"), ("z", "w")])
    h = induced_subgraph(induced_subgraph(g, [1, 2, 3]), [0, 2])
    assert h.label_of(range(h.n)) == ["x", "z"]
    assert h.origin == (1, 3)


def test_remove_vertices_examples():
    assert remove_vertices(complete_graph(5), [0]) == complete_graph(4)
    p = remove_vertices(path_graph(3), [1])
    assert p.n == 2 and p.m == 0
    s = remove_vertices(star_graph(5), [0])
    assert s.n == 5 and min_degree(s) == 0


def test_degrees():
    k4 = complete_graph(4)
    assert min_degree(k4) == 3 and average_degree(k4) == 3
    s = star_graph(3)
    assert min_degree(s) == 1 and average_degree(s) == Fraction(3, 2)
    assert min_degree(join_tightness(3, 4, 2)) == 5


def test_empty_graph_degree_is_domain_error():
    with pytest.raises(DomainError):
        min_degree(empty_graph(0))
    with pytest.raises(DomainError):
        average_degree(empty_graph(0))


def test_union_and_join_examples():
    two = disjoint_union([complete_graph(3), complete_graph(3)])
    assert two.n == 6 and two.m == 6
    wheelish = join(two, complete_graph(1))
    assert wheelish.degree(6) == 6
    g = join(disjoint_union([complete_graph(2)] * 3), complete_graph(2))
    assert g.n == 8 and min_degree(g) == 3


@given(graphs(max_n=12), st.data())
def test_remove_vertices_keeps_outside_edges(g, data):
    gone = set(data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n))) if g.n else set()
    h = remove_vertices(g, gone)
    assert h.n == g.n - len(gone)
    kept = {(u, v) for u, v in g.edges() if u not in gone and v not in gone}
    got = {(h.origin[u], h.origin[v]) for u, v in h.edges()}
    assert got == kept


@given(graphs(max_n=8), graphs(max_n=8))
def test_join_edge_count(g, h):
    assert join(g, h).m == g.m + h.m + g.n * h.n


@given(graphs(max_n=12))
def test_canonical_form(g):
    for v in g.vertices():
        row = g.adj[v]
        assert list(row) == sorted(set(row)) and v not in row
        assert all(v in g.adj[w] for w in row)
