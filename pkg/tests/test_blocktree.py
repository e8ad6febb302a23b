import pytest
from hypothesis import given

from conftest import graphs
from kproper.blocktree import (
    build_block_cut_tree,
    end_blocks,
    root_at,
    subtree_blocks,
    subtree_graph,
    to_dot,
    x_set,
)
from kproper.errors import DomainError
from kproper.graph import complete_graph, cycle_graph, disjoint_union, from_edge_list, path_graph

# triangles {0,1,2} and {3,4,5} joined by the bridge 2-3
BRIDGED = from_edge_list([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])


def _block_id(tree, vs):
    return tree.blocks.index(tuple(vs))


def test_two_connected_is_single_block():
    t = build_block_cut_tree(cycle_graph(6))
    assert len(t.blocks) == 1 and t.cut_vertices == ()
    assert end_blocks(t) == [0]
    assert x_set(t, 0) == tuple(range(6))


def test_path_tree():
    t = build_block_cut_tree(path_graph(4))
    assert sorted(t.blocks) == [(0, 1), (1, 2), (2, 3)]
    assert t.cut_vertices == (1, 2)
    adj = t.tree_adjacency()
    assert len(adj) == 5 and len(t.tree_edges()) == 4
    assert sorted(t.blocks[b] for b in end_blocks(t)) == [(0, 1), (2, 3)]
    mid = _block_id(t, (1, 2))
    assert x_set(t, mid) == ()


def test_bridged_triangles():
    t = build_block_cut_tree(BRIDGED)
    assert len(t.blocks) == 3 and t.cut_vertices == (2, 3)
    degrees = sorted(len(v) for v in t.tree_adjacency().values())
    assert degrees == [1, 1, 2, 2, 2]
    assert sorted(t.blocks[b] for b in end_blocks(t)) == [(0, 1, 2), (3, 4, 5)]
    left = _block_id(t, (0, 1, 2))
    assert x_set(t, left) == (0, 1)


def test_rooting_chain_and_subtrees():
    t = root_at(build_block_cut_tree(BRIDGED), _block_id(build_block_cut_tree(BRIDGED), (0, 1, 2)))
    left, bridge, right = (_block_id(t, b) for b in [(0, 1, 2), (2, 3), (3, 4, 5)])
    assert t.parent_cut[left] is None
    assert t.parent_cut[bridge] == 2 and t.parent_cut[right] == 3
    assert t.height(left) == 4
    assert subtree_graph(t, left) == BRIDGED
    assert subtree_graph(t, right) == complete_graph(3)
    mid = subtree_graph(t, bridge)
    assert mid.origin == (2, 3, 4, 5) and mid.m == 4


def test_star_of_blocks():
    # three triangles through vertex 0
    g = from_edge_list([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 0)])
    t = build_block_cut_tree(g)
    for r in range(3):
        rt = root_at(t, r)
        assert rt.child_blocks(0) == tuple(b for b in range(3) if b != r)
        assert all(rt.parent_cut[b] == 0 for b in range(3) if b != r)


def test_errors():
    with pytest.raises(DomainError):
        build_block_cut_tree(disjoint_union([complete_graph(3)] * 2))
    t = build_block_cut_tree(BRIDGED)
    with pytest.raises(DomainError):
        root_at(t, 7)
    with pytest.raises(DomainError):
        subtree_graph(t, 0)


def test_dot_dump():
    t = root_at(build_block_cut_tree(BRIDGED), 0)
    dot = to_dot(t)
    assert dot.startswith("graph blockcut {")
    assert "c2" in dot and "c3" in dot and dot.count(" -- ") == 4


@given(graphs(min_n=1, max_n=14, connected=True))
def test_tree_invariants(g):
    t = build_block_cut_tree(g)
    nodes = len(t.blocks) + len(t.cut_vertices)
    edges = t.tree_edges()
    assert len(edges) == sum(len(c) for c in t.block_cuts)
    if nodes:
        # connected with nodes-1 edges: a tree
        assert len(edges) == nodes - 1
        adj = t.tree_adjacency()
        start = next(iter(adj))
        seen, stack = {start}, [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        assert len(seen) == nodes
    for b, c in edges:
        assert c in t.blocks[b]
    for v in range(g.n):
        count = sum(v in blk for blk in t.blocks)
        assert count >= 2 if v in t.cut_vertices else count <= 1
    if g.n > 1:
        assert sum(len(x_set(t, b)) for b in range(len(t.blocks))) + len(t.cut_vertices) == g.n
        for b in range(len(t.blocks)):
            for x in x_set(t, b):
                assert set(g.adj[x]) <= set(t.blocks[b])
        for r in end_blocks(t):
            rt = root_at(t, r)
            assert subtree_graph(rt, r) == g
            assert all(rt.parent_cut[b] is not None for b in range(len(t.blocks)) if b != r)
            assert sorted(subtree_blocks(rt, r)) == list(range(len(t.blocks)))
