import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, random_graph
from kproper.errors import DomainError, Infeasible
from kproper.extremal import apex_counterexample, apex_vertex, join_tightness
from kproper.generators import meets_greedy_degree, planted_graph
from kproper.graph import complete_graph, cycle_graph, disjoint_union, from_edge_list, induced_subgraph, min_degree, path_graph
from kproper.greedy import (
    DEFAULT_GAMMA,
    MIN_C,
    GreedyParams,
    GreedyTrace,
    TraceRow,
    absorb_to_maximality,
    bound_report,
    extract_max_k_connected,
    k_proper_partition_greedy,
    search_k_connected,
)
from kproper.oracle import brute_has_k_connected_subgraph, brute_is_k_connected
from kproper.partition import check_partition


def _assert_maximal(g, h, k):
    inside = set(h)
    for v in range(g.n):
        if v not in inside:
            assert len(inside & set(g.adj[v])) <= k - 1


def _assert_trace(trace):
    assert trace.violations() == []
    for a, b in zip(trace.rows, trace.rows[1:]):
        assert b.n == a.n - a.size
        assert b.delta >= a.delta - (trace.k - 1)


def test_constants():
    assert MIN_C * DEFAULT_GAMMA == Fraction(2123, 180)
    assert GreedyParams(k=3).c_gamma == Fraction(2123, 180)


@pytest.mark.parametrize("kw", [{"k": 1}, {"c": Fraction(3)}, {"gamma": 0}])
def test_params_validation(kw):
    with pytest.raises(DomainError):
        GreedyParams(**kw)


def test_k10_single_part():
    p, trace = k_proper_partition_greedy(complete_graph(10), GreedyParams(k=3))
    assert p.parts == (tuple(range(10)),)
    assert len(trace.rows) == 1 and trace.final_state == "final_k_connected"


def test_two_k6():
    p, _ = k_proper_partition_greedy(disjoint_union([complete_graph(6)] * 2))
    assert sorted(p.parts) == [tuple(range(6)), tuple(range(6, 12))]


def test_join_tightness_part_count():
    g = join_tightness(2, 5, 3)
    assert g.n == 16 and min_degree(g) == 5
    p, trace = k_proper_partition_greedy(g)
    assert check_partition(g, p.parts, 2).ok
    assert len(p) == 3 == (g.n - 2 + 1) // (min_degree(g) - 2 + 2)
    _assert_trace(trace)


def test_extract_examples():
    assert extract_max_k_connected(complete_graph(6), 3) == tuple(range(6))
    assert extract_max_k_connected(path_graph(7), 2) is None
    g = apex_counterexample(2, 4, 3)
    h = extract_max_k_connected(g, 2)
    assert len(h) == 4 and apex_vertex(2, 4, 3) not in h
    with pytest.raises(DomainError):
        extract_max_k_connected(g, 1)


def test_search_examples():
    two_k5 = from_edge_list(list(itertools.combinations(range(5), 2)) + list(itertools.combinations(range(4, 9), 2)))
    assert search_k_connected(two_k5, 4) in [tuple(range(5)), tuple(range(4, 9))]
    assert search_k_connected(cycle_graph(8), 2) == tuple(range(8))


def test_absorb_examples():
    assert absorb_to_maximality(complete_graph(6), range(4), 3) == tuple(range(6))
    g = apex_counterexample(2, 4, 3)
    assert absorb_to_maximality(g, range(4), 2) == (0, 1, 2, 3)
    c5_plus = from_edge_list([(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 2)])
    assert absorb_to_maximality(c5_plus, range(5), 2) == tuple(range(6))


def test_apex_is_infeasible_with_remainder():
    g = apex_counterexample(2, 4, 3)
    with pytest.raises(Infeasible) as err:
        k_proper_partition_greedy(g)
    exc = err.value
    assert exc.step == "no-k-connected-subgraph"
    assert exc.remainder == (12,) and len(exc.partial) == 3
    assert exc.trace.final_state == "failed_extraction"
    _assert_trace(exc.trace)


@given(graphs(max_n=11), st.integers(2, 3))
def test_search_matches_oracle(g, k):
    found, witness = brute_has_k_connected_subgraph(g, k)
    got = search_k_connected(g, k)
    assert (got is not None) == found
    if found:
        assert len(got) == len(witness)
        assert brute_is_k_connected(induced_subgraph(g, got), k)


def test_largest_order_random_n12(rng):
    for _ in range(25):
        g = random_graph(rng, 12, rng.uniform(0.2, 0.6))
        for k in (2, 3):
            found, witness = brute_has_k_connected_subgraph(g, k)
            got = extract_max_k_connected(g, k)
            assert (got is not None) == found
            if found:
                assert len(got) >= len(witness)
                _assert_maximal(g, got, k)


@given(graphs(max_n=11), st.integers(2, 3))
def test_greedy_sound_with_trace(g, k):
    try:
        p, trace = k_proper_partition_greedy(g, GreedyParams(k=k))
    except Infeasible as exc:
        _assert_trace(exc.trace)
        covered = sorted([v for part in exc.partial for v in part] + list(exc.remainder))
        assert covered == list(range(g.n))
        return
    assert check_partition(g, p.parts, k).ok
    _assert_trace(trace)
    # every part maximal in what was left when it was taken
    left = set(range(g.n))
    for part in p.parts:
        sub = sorted(left)
        local = induced_subgraph(g, sub)
        _assert_maximal(local, [sub.index(v) for v in part], k)
        left -= set(part)


def test_trace_violation_detection():
    t = GreedyTrace(2, [TraceRow(0, 10, 5, 4), TraceRow(1, 5, 3, 5)])
    assert len(t.violations()) == 2


def test_bound_on_planted_graphs():
    rng = random.Random(5)
    for k, sizes in [(2, [60, 70, 80]), (3, [90, 100])]:
        for links in ("sparse", "spine", "random", "none"):
            g = planted_graph(rng, sizes, k, links=links, cross=30)
            assert meets_greedy_degree(g, k)
            p, trace = k_proper_partition_greedy(g, GreedyParams(k=k))
            assert check_partition(g, p.parts, k).ok
            assert len(p) <= bound_report(g.n, min_degree(g), GreedyParams(k=k)).get("greedy").limit
            _assert_trace(trace)


# -- bound arithmetic ----------------------------------------------------------

def test_bound_hypothesis_fails():
    r = bound_report(1180, 109, GreedyParams(k=2))
    b = r.get("greedy_default")
    assert not b.holds
    assert 109**2 == 11881 < Fraction(2123, 180) * 1180


def test_bound_ceiling_19():
    b = bound_report(180, 109, GreedyParams(k=2)).get("greedy")
    assert b.holds and b.ceiling == Fraction(2123, 109) and b.limit == 19


def test_conjectured_ceiling_join():
    # join(3,4,2): n = 2*4 + 2 = 10, delta = 5 -> (10-2)/(5-1) = 2 = s
    g = join_tightness(3, 4, 2)
    r = bound_report(g.n, min_degree(g), GreedyParams(k=3))
    b = r.get("conjectured")
    assert b.ceiling == 2 and b.limit == 2 and b.holds
    # the n=9 variant of the same arithmetic
    assert bound_report(9, 5, GreedyParams(k=3)).get("conjectured").ceiling == Fraction(7, 4)


def test_block_tree_bound_only_for_k2():
    assert bound_report(100, 10, GreedyParams(k=2)).get("block_tree").limit == 9
    with pytest.raises(KeyError):
        bound_report(100, 10, GreedyParams(k=3)).get("block_tree")


def test_tradeoff_and_rounds():
    r = bound_report(1000, 200, GreedyParams(k=2))
    t = r.get("tradeoff")
    # k c_k = 2 gamma = 193/30
    assert t.condition == "delta^2 >= 193/30*n" and t.holds
    # sqrt(193/30 * 1000) = 80.2...
    assert t.limit == 80
    assert r.rounds == 55  # ceil(2123/180 * 5 - 4) = ceil(54.97)


@given(st.integers(1, 5000), st.integers(1, 300), st.integers(2, 6))
def test_floor_sqrt_exact(n, delta, k):
    t = bound_report(n, delta, GreedyParams(k=k)).get("tradeoff")
    q = Fraction(k * (k - 1), k) * 2 * DEFAULT_GAMMA * n / (k - 1) ** 2
    assert t.limit**2 <= q < (t.limit + 1) ** 2
