import pytest

from kproper.connectivity import connected_components, vertex_connectivity
from kproper.errors import DomainError
from kproper.extremal import ExtremalSpec, apex_counterexample, apex_vertex, coupling, join_tightness
from kproper.graph import complete_graph, induced_subgraph, min_degree, remove_vertices
from kproper.oracle import (
    brute_has_k_connected_subgraph,
    brute_min_k_proper_partition,
    brute_vertex_connectivity,
)
from kproper.partition import check_partition


def test_apex_2_4_3():
    g = apex_counterexample(2, 4, 3)
    apex = apex_vertex(2, 4, 3)
    assert g.n == 13 and g.degree(apex) == 3 and min_degree(g) == 3
    assert sorted({g.degree(v) for v in range(12)}) == [3, 4]


def test_apex_smallest_case_is_p3():
    g = apex_counterexample(2, 2, 1)
    assert g.n == 3 and g.m == 2 and min_degree(g) == 1


@pytest.mark.parametrize("k, l, p", [(2, 3, 2), (2, 4, 2), (3, 4, 2), (3, 3, 1), (2, 3, 3)])
def test_apex_structure(k, l, p):
    g = apex_counterexample(k, l, p)
    apex = apex_vertex(k, l, p)
    assert g.degree(apex) == p * (k - 1)
    for c in range(p):
        clique = set(range(c * l, (c + 1) * l))
        assert len(clique & set(g.adj[apex])) == k - 1
    rest = remove_vertices(g, [apex])
    comps = connected_components(rest)
    assert len(comps) == p
    assert all(induced_subgraph(rest, comp) == complete_graph(l) for comp in comps)
    found, _ = brute_has_k_connected_subgraph(g, k, must_contain=apex)
    assert not found


def test_join_examples():
    g = join_tightness(2, 3, 2)
    assert g.n == 7 and min_degree(g) == 3
    assert join_tightness(2, 2, 1) == complete_graph(3)


@pytest.mark.parametrize("k, r, s", [(2, 3, 2), (3, 3, 2), (2, 4, 2), (3, 2, 3)])
def test_join_connectivity_and_spine_partition(k, r, s):
    g = join_tightness(k, r, s)
    assert g.n == s * r + k - 1 and min_degree(g) == r + k - 2
    if s > 1:
        assert vertex_connectivity(g)[0] == brute_vertex_connectivity(g) == k - 1
    # merge the spine into the first clique: s parts
    spine = list(range(s * r, g.n))
    parts = [list(range(r)) + spine] + [list(range(i * r, (i + 1) * r)) for i in range(1, s)]
    check = check_partition(g, parts, k)
    if r >= k + 1:
        assert check.ok and len(parts) == s


@pytest.mark.parametrize("k, r, s", [(2, 3, 2), (2, 4, 2), (3, 3, 2)])
def test_join_needs_s_parts(k, r, s):
    g = join_tightness(k, r, s)
    count, _ = brute_min_k_proper_partition(g, k)
    assert count == s


def test_join_with_tiny_cliques_has_no_partition():
    # three triangles through one vertex: only one of them can own the hub
    assert brute_min_k_proper_partition(join_tightness(2, 2, 3), 2) is None


@pytest.mark.parametrize("args", [(1, 3, 2), (3, 2, 2), (2, 3, 0)])
def test_apex_parameter_errors(args):
    with pytest.raises(DomainError):
        apex_counterexample(*args)


@pytest.mark.parametrize("args", [(1, 3, 2), (2, 1, 2), (2, 3, 0)])
def test_join_parameter_errors(args):
    with pytest.raises(DomainError):
        join_tightness(*args)


def test_coupling_reports():
    # l = p(k-1): l=4, p=4, k=2 -> l^2 = 16 = (k-1)(n-1), n = 17
    c = coupling(ExtremalSpec("apex", 2, 4, 4))
    assert c == {"n": 17, "delta": 3, "coupled": True}
    assert not coupling(ExtremalSpec("apex", 2, 4, 3))["coupled"]
    # join(3,3,2): n = 8, delta = 4, delta^2 = 16 = (k-1)n
    assert coupling(ExtremalSpec("join", 3, 3, 2))["coupled"]
    j = coupling(ExtremalSpec("join", 3, 4, 2))
    assert j["n"] == 10 and j["delta"] == 5 and j["min_parts"] == 2 and not j["coupled"]
    assert ExtremalSpec("join", 2, 3, 2).build() == join_tightness(2, 3, 2)
    with pytest.raises(DomainError):
        ExtremalSpec("ring", 2, 3, 2).build()
