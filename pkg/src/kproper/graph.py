"""Undirected simple graphs on dense integer vertex ids.

A :class:`Graph` is immutable. Every derived graph (induced subgraph, vertex
removal, k-core) keeps two per-vertex tables alongside the adjacency:

* ``labels`` -- the user-facing vertex names, carried through unchanged;
* ``origin`` -- the vertex id in the graph the chain of derivations started
  from, so nested subgraphs can report parts in top-level ids.

Equality compares only ``n`` and the adjacency lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import DomainError, FormatError

__all__ = [
    "Graph",
    "from_edge_list",
    "from_adjacency",
    "induced_subgraph",
    "remove_vertices",
    "min_degree",
    "average_degree",
    "disjoint_union",
    "join",
    "complete_graph",
    "empty_graph",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "complete_bipartite_graph",
    "petersen_graph",
]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[Hashable, ...] = field(default=(), compare=False, repr=False)
    origin: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise DomainError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        if not self.origin:
            object.__setattr__(self, "origin", tuple(range(self.n)))

    @cached_property
    def adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjsets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in row:
                if v > u:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def with_identity_origin(self) -> Graph:
        return replace(self, origin=tuple(range(self.n)))

    def label_of(self, vs: Iterable[int]) -> list[Hashable]:
        return [self.labels[v] for v in vs]

    def __len__(self) -> int:
        return self.n


def from_adjacency(
    rows: Sequence[Iterable[int]],
    labels: Sequence[Hashable] = (),
    origin: Sequence[int] = (),
) -> Graph:
    """Build a graph from possibly unsorted, symmetric neighbor collections."""
    adj = tuple(tuple(sorted(set(r))) for r in rows)
    return Graph(len(adj), adj, tuple(labels), tuple(origin))


def from_edge_list(
    edges: Iterable[tuple[Hashable, Hashable]],
    n: int | None = None,
    vertices: Iterable[Hashable] = (),
) -> Graph:
    """Build a canonical graph from vertex-id pairs.

    If every endpoint is a nonnegative ``int`` the ids are used directly and
    ``n`` (when given) can add trailing isolated vertices. Otherwise vertices
    are named objects, numbered in ``str`` order; ``vertices`` may name extra
    isolated ones. Duplicate edges collapse; a self-loop raises
    :class:`FormatError` carrying the 1-based index of the offending pair.
    """
    edges = list(edges)
    extra = list(vertices)
    for i, (u, v) in enumerate(edges, start=1):
        if u == v:
            raise FormatError(f"self-loop at vertex {u!r}", line=i)
    names = extra + [x for e in edges for x in e]
    if all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in names):
        count = max(names, default=-1) + 1
        if n is not None:
            if n < count:
                raise DomainError(f"declared n={n} but vertex {count - 1} appears")
            count = n
        rows: list[set[int]] = [set() for _ in range(count)]
        for u, v in edges:
            rows[u].add(v)
            rows[v].add(u)
        return from_adjacency(rows)
    ordered = sorted(set(names), key=str)
    if n is not None and n != len(ordered):
        raise DomainError(f"declared n={n} but {len(ordered)} named vertices")
    index = {name: i for i, name in enumerate(ordered)}
    rows = [set() for _ in ordered]
    for u, v in edges:
        rows[index[u]].add(index[v])
        rows[index[v]].add(index[u])
    return from_adjacency(rows, labels=ordered)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """``G[S]`` with ids renumbered 0..|S|-1 in increasing original order."""
    members = sorted(set(vertices))
    if members and (members[0] < 0 or members[-1] >= g.n):
        raise DomainError("vertex set is not contained in the graph")
    local = {v: i for i, v in enumerate(members)}
    rows = []
    for v in members:
        rows.append(tuple(local[w] for w in g.adj[v] if w in local))
    return Graph(
        len(members),
        tuple(rows),
        tuple(g.labels[v] for v in members),
        tuple(g.origin[v] for v in members),
    )


def remove_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    gone = set(vertices)
    if any(v < 0 or v >= g.n for v in gone):
        raise DomainError("vertex set is not contained in the graph")
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise DomainError("minimum degree of the empty graph")
    return min(len(row) for row in g.adj)


def average_degree(g: Graph) -> Fraction:
    """Exact ``2e/n``."""
    if g.n == 0:
        raise DomainError("average degree of the empty graph")
    return Fraction(2 * g.m, g.n)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: list[tuple[int, ...]] = []
    offset = 0
    for h in graphs:
        rows.extend(tuple(w + offset for w in row) for row in h.adj)
        offset += h.n
    return Graph(offset, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    left = range(g.n)
    right = range(g.n, g.n + h.n)
    rows = [tuple(g.adj[v]) + tuple(right) for v in left]
    rows += [tuple(left) + tuple(w + g.n for w in h.adj[v]) for v in range(h.n)]
    return Graph(g.n + h.n, tuple(rows))


# Named graphs, mostly for tests and the generators.

def empty_graph(n: int) -> Graph:
    return Graph(n, tuple(() for _ in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(tuple(w for w in range(n) if w != v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n=n)


def star_graph(leaves: int) -> Graph:
    return from_edge_list([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return from_edge_list([(i, a + j) for i in range(a) for j in range(b)], n=a + b)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(outer + spokes + inner)
