"""2-proper partitions built along the block-cut tree.

For a graph with minimum degree at least sqrt(n) the construction below
yields at most (n-1)/delta parts:

1. split into connected components and handle each separately;
2. a 2-connected component is one part;
3. a block of order >= 2*delta becomes a part and the rest is handled
   from scratch (with its own minimum degree);
4. otherwise root the block-cut tree at a largest end-block B0 and
   combine, bottom-up, partitions of every subtree G(B) and G(B) - u,
   where u is the parent cut vertex of B.

Each step checks the local facts it relies on. When one fails (possible
only if the degree condition does not hold) :class:`Infeasible` names the
step and the offending vertices. Whatever is returned is re-certified part by
part, so soundness never depends on those facts.
"""

from __future__ import annotations

from collections import deque

from .blocktree import BlockCutTree, build_block_cut_tree, end_blocks, root_at, subtree_blocks, x_set
from .connectivity import biconnected_components, connected_components
from .errors import DomainError, Infeasible
from .graph import Graph, induced_subgraph, min_degree, remove_vertices
from .partition import Partition, certify_part, check_partition

__all__ = ["two_proper_partition", "extendable_partition", "find_anchor_block", "degree_condition"]

Part = tuple[int, ...]


def _pick_child(tree: BlockCutTree, x: int) -> int | None:
    """A child block of cut vertex ``x`` with nonempty X-set, largest first."""
    blocks = tree.blocks
    cands = [b for b in tree.child_blocks(x) if x_set(tree, b)]
    if not cands:
        return None
    return max(cands, key=lambda b: (len(blocks[b]), -b))


def find_anchor_block(tree: BlockCutTree, b: int, delta: int) -> Part:
    """The block A of ``B - u`` (u the parent cut of B) that contains X_B.

    Also checks that |A| >= delta and that every vertex of B outside A and u
    has a child block with nonempty X-set. Vertex ids are those of
    ``tree.graph``.
    """
    u = tree.parent_cut[b]
    if u is None:
        raise DomainError("the root block has no parent cut vertex")
    xs = x_set(tree, b)
    if not xs:
        raise DomainError(f"block {b} has no non-cut vertices")
    rest = [v for v in tree.blocks[b] if v != u]
    local = biconnected_components(induced_subgraph(tree.graph, rest))
    xs_local = {rest.index(x) for x in xs}
    cands = [blk for blk in local.blocks if xs_local.issubset(blk)]
    if not cands:
        raise Infeasible(
            "anchor-spread",
            f"non-cut vertices of block {b} do not share a block once its parent cut vertex is deleted",
            witness=xs,
        )
    anchor = tuple(rest[i] for i in max(cands, key=lambda blk: (len(blk), [-v for v in blk])))
    if len(anchor) < delta:
        raise Infeasible(
            "anchor-order", f"anchor of block {b} has {len(anchor)} < {delta} vertices", witness=anchor
        )
    if len(anchor) < 3:
        raise Infeasible("anchor-bridge", f"anchor of block {b} is a single edge", witness=anchor)
    inside = set(anchor)
    for x in tree.blocks[b]:
        if x != u and x not in inside and _pick_child(tree, x) is None:
            raise Infeasible(
                "anchor-child",
                f"a vertex outside the anchor of block {b} has no child block with non-cut vertices",
                witness=(x,),
            )
    return anchor


def _subtree_partitions(
    tree: BlockCutTree, delta: int, blocks: list[int]
) -> tuple[dict[int, list[Part]], dict[int, list[Part]]]:
    """Partitions of G(B) - u (``minus``) and of G(B) (``whole``) for every
    block in ``blocks``, which must be closed under taking descendants.

    ``whole[B]`` exists only when X_B is nonempty. Children are processed
    before parents, following the reversed BFS order of the rooted tree.
    """
    wanted = set(blocks)
    minus: dict[int, list[Part]] = {}
    whole: dict[int, list[Part]] = {}

    def children(x: int) -> tuple[int, ...]:
        return tree.child_blocks(x)

    def swap_in(x: int, chosen: int) -> list[Part]:
        # P_x with the partition of G(chosen) - x replaced by one of G(chosen)
        out = [p for c in children(x) if c != chosen for p in minus[c]]
        return out + whole[chosen]

    for b in reversed(tree.order):
        if b not in wanted:
            continue
        xs = x_set(tree, b)
        cuts = tree.child_cuts(b)
        if not xs:
            out: list[Part] = []
            for x in cuts:
                chosen = _pick_child(tree, x)
                if chosen is None:
                    raise Infeasible(
                        "empty-x-set",
                        f"a cut vertex of block {b} has no child block with non-cut vertices",
                        witness=(x,),
                    )
                out += swap_in(x, chosen)
            minus[b] = out
            continue
        anchor = find_anchor_block(tree, b, delta)
        inside = set(anchor)
        out = [anchor]
        for x in cuts:
            if x in inside:
                out += [p for c in children(x) for p in minus[c]]
            else:
                out += swap_in(x, _pick_child(tree, x))
        minus[b] = out
        whole[b] = [tree.blocks[b]] + [p for x in cuts for c in children(x) for p in minus[c]]
    return minus, whole


def extendable_partition(tree: BlockCutTree, b: int, delta: int, *, whole: bool = False) -> Partition:
    """Partition of G(B) - u, or of G(B) with ``whole=True``, for a non-root
    block B of a rooted tree.

    The result is tagged ``extendable=delta`` when every part has at least
    ``delta`` vertices.
    """
    if tree.root is None:
        raise DomainError("block-cut tree is not rooted")
    if b == tree.root:
        raise DomainError("the root block has no parent cut vertex")
    if whole and not x_set(tree, b):
        raise DomainError(f"block {b} has no non-cut vertices")
    minus, full = _subtree_partitions(tree, delta, subtree_blocks(tree, b))
    parts = tuple(tuple(sorted(p)) for p in (full if whole else minus)[b])
    certs = tuple(certify_part(tree.graph, p, 2) for p in parts)
    tag = delta if all(len(p) >= delta for p in parts) else None
    return Partition(parts, 2, certs, "block-tree", extendable=tag)


class _Builder:
    def __init__(self, g: Graph, debug: bool):
        self.g = g
        self.debug = debug
        self.parts: list[Part] = []
        self.notes: list[str] = []
        self.queue: deque[Graph] = deque([g.with_identity_origin()])

    def fail(self, exc: Infeasible, c: Graph) -> Infeasible:
        witness = tuple(sorted(c.origin[v] for v in exc.witness))
        done = {v for p in self.parts for v in p}
        return Infeasible(
            exc.step,
            exc.detail,
            witness=witness,
            partial=tuple(self.parts),
            remainder=tuple(v for v in range(self.g.n) if v not in done),
        )

    def emit(self, c: Graph, local: Part) -> None:
        self.parts.append(tuple(sorted(c.origin[v] for v in local)))

    def run(self) -> list[Part]:
        while self.queue:
            h = self.queue.popleft()
            for comp in connected_components(h):
                c = induced_subgraph(h, comp)
                try:
                    self.component(c)
                except Infeasible as exc:
                    raise self.fail(exc, c) from None
        return self.parts

    def component(self, c: Graph) -> None:
        if c.n < 3:
            raise Infeasible(
                "small-component",
                f"a component with {c.n} vertices cannot be 2-connected",
                witness=tuple(range(c.n)),
            )
        dec = biconnected_components(c)
        if not dec.cut_vertices:
            self.emit(c, tuple(range(c.n)))
            return
        delta = min_degree(c)
        hypothesis = delta * delta >= c.n
        big = [b for b, blk in enumerate(dec.blocks) if len(blk) >= max(2 * delta, 3)]
        if big:
            b = max(big, key=lambda i: (len(dec.blocks[i]), -i))
            block = dec.blocks[b]
            self.emit(c, block)
            rest = remove_vertices(c, block)
            if self.debug and hypothesis:
                # the remainder again satisfies the degree condition
                d = min_degree(rest)
                assert d * d > rest.n, "degree condition lost after removing a big block"
            self.queue.append(rest)
            return
        self.tree(c, dec, delta, hypothesis)

    def tree(self, c: Graph, dec, delta: int, hypothesis: bool) -> None:
        tree = build_block_cut_tree(c, dec)
        ends = end_blocks(tree)
        root = max(ends, key=lambda b: (len(tree.blocks[b]), -b))
        if len(tree.blocks[root]) < 3:
            raise Infeasible("end-block", f"end-block {root} is a single edge", witness=tree.blocks[root])
        tree = root_at(tree, root)
        if self.debug and hypothesis:
            _check_cut_components(c, tree, delta)
            for b in range(len(tree.blocks)):
                xs = x_set(tree, b)
                assert not xs or len(xs) >= 3, f"block {b} has 1 or 2 non-cut vertices"
        minus, _ = _subtree_partitions(tree, delta, list(tree.order[1:]))
        (c0,) = tree.block_cuts[root]
        rest = [p for child in tree.child_blocks(c0) for p in minus[child]]
        small = [p for p in rest if len(p) < delta]
        if small:
            self.notes.append(f"{len(small)} parts smaller than minimum degree {delta}")
            if self.debug and hypothesis:
                raise AssertionError("extendable partition has a part below the minimum degree")
        self.emit(c, tree.blocks[root])
        for p in rest:
            self.emit(c, p)


def _check_cut_components(c: Graph, tree: BlockCutTree, delta: int) -> None:
    for x in tree.cut_vertices:
        for comp in connected_components(c, (x,)):
            assert len(comp) >= delta, f"component of G - {x} has {len(comp)} < {delta} vertices"


def two_proper_partition(g: Graph, *, debug: bool = False) -> Partition:
    """A 2-proper partition of ``g``.

    Raises :class:`Infeasible` when a step of the construction cannot be
    carried out; this cannot happen when ``min_degree(g) >= sqrt(n)``. With
    ``debug=True`` the intermediate facts the part-count bound relies on are
    asserted whenever the degree condition holds.
    """
    if g.n == 0:
        return Partition((), 2, (), "block-tree")
    builder = _Builder(g, debug)
    parts = builder.run()
    check = check_partition(g, parts, 2)
    if not check.ok:
        bad = [i for i, cert in enumerate(check.certificates) if not cert.confirmed]
        raise Infeasible(
            "certification",
            f"parts {bad} failed 2-connectivity or the parts do not cover the graph",
            witness=tuple(v for i in bad for v in parts[i]),
            partial=tuple(parts),
        )
    delta = min_degree(g)
    tag = delta if all(len(p) >= delta for p in parts) else None
    return Partition(tuple(parts), 2, check.certificates, "block-tree", extendable=tag,
                     notes=tuple(builder.notes))


def degree_condition(g: Graph) -> bool:
    """``min_degree(g) >= sqrt(n)``, exactly."""
    d = min_degree(g)
    return d * d >= g.n
