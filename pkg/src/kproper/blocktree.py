"""Block-cut-vertex trees.

Nodes are blocks (by their index in the decomposition) and cut vertices;
a block is adjacent to each cut vertex it contains. Rooting returns a new
annotated tree and leaves the original untouched, so block ids stay stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace

from .connectivity import BlockDecomposition, biconnected_components, connected_components
from .errors import DomainError
from .graph import Graph, induced_subgraph

__all__ = [
    "BlockCutTree",
    "build_block_cut_tree",
    "end_blocks",
    "root_at",
    "subtree_blocks",
    "subtree_vertices",
    "subtree_graph",
    "x_set",
    "to_dot",
]


@dataclass(frozen=True)
class BlockCutTree:
    graph: Graph
    decomposition: BlockDecomposition
    block_cuts: tuple[tuple[int, ...], ...]
    cut_blocks: dict[int, tuple[int, ...]]
    root: int | None = None
    parent_cut: tuple[int | None, ...] = ()
    parent_block: dict[int, int] = field(default_factory=dict)
    order: tuple[int, ...] = ()

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.decomposition.blocks

    @property
    def cut_vertices(self) -> tuple[int, ...]:
        return self.decomposition.cut_vertices

    def tree_adjacency(self) -> dict[tuple[str, int], list[tuple[str, int]]]:
        adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for b, cuts in enumerate(self.block_cuts):
            adj[("B", b)] = [("c", c) for c in cuts]
        for c, bs in self.cut_blocks.items():
            adj[("c", c)] = [("B", b) for b in bs]
        return adj

    def tree_edges(self) -> list[tuple[int, int]]:
        """``(block, cut vertex)`` pairs."""
        return [(b, c) for b, cuts in enumerate(self.block_cuts) for c in cuts]

    def _require_root(self) -> None:
        if self.root is None:
            raise DomainError("block-cut tree is not rooted")

    def child_cuts(self, b: int) -> tuple[int, ...]:
        self._require_root()
        up = self.parent_cut[b]
        return tuple(c for c in self.block_cuts[b] if c != up)

    def child_blocks(self, c: int) -> tuple[int, ...]:
        self._require_root()
        up = self.parent_block[c]
        return tuple(b for b in self.cut_blocks[c] if b != up)

    def height(self, b: int) -> int:
        """Height of the subtree rooted at block ``b``, in tree edges."""
        best = 0
        stack = [(b, 0)]
        while stack:
            node, depth = stack.pop()
            best = max(best, depth)
            for c in self.child_cuts(node):
                for child in self.child_blocks(c):
                    stack.append((child, depth + 2))
        return best


def build_block_cut_tree(g: Graph, decomposition: BlockDecomposition | None = None) -> BlockCutTree:
    """Block-cut tree of a connected graph."""
    if g.n == 0 or len(connected_components(g)) != 1:
        raise DomainError("block-cut tree needs a connected graph")
    dec = decomposition if decomposition is not None else biconnected_components(g)
    cutset = set(dec.cut_vertices)
    block_cuts = tuple(tuple(v for v in b if v in cutset) for b in dec.blocks)
    cut_blocks: dict[int, list[int]] = {c: [] for c in dec.cut_vertices}
    for b, cuts in enumerate(block_cuts):
        for c in cuts:
            cut_blocks[c].append(b)
    return BlockCutTree(g, dec, block_cuts, {c: tuple(bs) for c, bs in cut_blocks.items()})


def end_blocks(tree: BlockCutTree) -> list[int]:
    """Blocks containing at most one cut vertex (leaves of the tree)."""
    return [b for b, cuts in enumerate(tree.block_cuts) if len(cuts) <= 1]


def root_at(tree: BlockCutTree, root: int) -> BlockCutTree:
    if not 0 <= root < len(tree.blocks):
        raise DomainError(f"unknown block id {root}")
    parent_cut: list[int | None] = [None] * len(tree.blocks)
    parent_block: dict[int, int] = {}
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        b = queue.popleft()
        for c in tree.block_cuts[b]:
            if c in parent_block:
                continue
            parent_block[c] = b
            for child in tree.cut_blocks[c]:
                if child not in seen:
                    seen.add(child)
                    parent_cut[child] = c
                    order.append(child)
                    queue.append(child)
    return replace(
        tree,
        root=root,
        parent_cut=tuple(parent_cut),
        parent_block=parent_block,
        order=tuple(order),
    )


def subtree_blocks(tree: BlockCutTree, b: int) -> list[int]:
    stack = [b]
    out = []
    while stack:
        node = stack.pop()
        out.append(node)
        for c in tree.child_cuts(node):
            stack.extend(tree.child_blocks(c))
    return sorted(out)


def subtree_vertices(tree: BlockCutTree, b: int) -> tuple[int, ...]:
    return tuple(sorted({v for node in subtree_blocks(tree, b) for v in tree.blocks[node]}))


def subtree_graph(tree: BlockCutTree, b: int) -> Graph:
    """Union of block ``b`` and its descendant blocks.

    Every edge between two vertices of the union lies in a descendant block,
    so the union is the induced subgraph on its vertex set.
    """
    return induced_subgraph(tree.graph, subtree_vertices(tree, b))


def x_set(tree: BlockCutTree, b: int) -> tuple[int, ...]:
    """Vertices of block ``b`` that are not cut vertices of the graph."""
    cuts = set(tree.block_cuts[b])
    return tuple(v for v in tree.blocks[b] if v not in cuts)


def to_dot(tree: BlockCutTree) -> str:
    g = tree.graph
    lines = ["graph blockcut {"]
    for b, block in enumerate(tree.blocks):
        names = " ".join(str(g.labels[v]) for v in block)
        mark = " shape=box" if b == tree.root else ""
        lines.append(f'  B{b} [label="B{b}: {names}"{mark}];')
    for c in tree.cut_vertices:
        lines.append(f'  c{g.labels[c]} [shape=point xlabel="{g.labels[c]}"];')
    for b, c in tree.tree_edges():
        lines.append(f"  B{b} -- c{g.labels[c]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
