"""Random graph models tuned to the minimum-degree regimes of the partitioners.

All generators take a :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

from .graph import Graph, from_edge_list, min_degree

__all__ = [
    "gnp",
    "dense_block_edges",
    "block_tree_graph",
    "planted_graph",
    "meets_sqrt_degree",
    "meets_greedy_degree",
]


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(edges, n=n)


def dense_block_edges(vertices: list[int], d: int, rng: random.Random, drop: float = 0.3) -> list[tuple[int, int]]:
    """A clique on ``vertices`` thinned at random while every vertex keeps
    degree >= ``d``."""
    m = len(vertices)
    deg = {v: m - 1 for v in vertices}
    pairs = [(vertices[i], vertices[j]) for i in range(m) for j in range(i + 1, m)]
    rng.shuffle(pairs)
    kept = []
    for u, v in pairs:
        if deg[u] > d and deg[v] > d and rng.random() < drop:
            deg[u] -= 1
            deg[v] -= 1
        else:
            kept.append((u, v))
    return kept


def block_tree_graph(
    rng: random.Random,
    n_target: int,
    *,
    slack: int = 1,
    big_block_rate: float = 0.15,
    degree: int | None = None,
) -> Graph:
    """Dense blocks glued into a tree-like graph with many cut vertices.

    Blocks (thinned cliques with inner minimum degree d, d about
    sqrt(n_target)) are attached by sharing a vertex, by a bridge, or by a
    connector triangle whose three vertices are all cut vertices. ``degree``
    overrides d, e.g. to build components of a larger disjoint union.
    """
    d = isqrt(n_target) + slack if degree is None else degree
    edges: list[tuple[int, int]] = []
    count = 0

    def new_block(shared: int | None = None) -> list[int]:
        nonlocal count
        if rng.random() < big_block_rate:
            m = rng.randint(2 * d, 3 * d)
        else:
            m = rng.randint(d + 1, 2 * d - 1)
        fresh = m if shared is None else m - 1
        vs = list(range(count, count + fresh))
        count += fresh
        if shared is not None:
            vs.append(shared)
        edges.extend(dense_block_edges(vs, d, rng))
        return vs

    new_block()
    while count < n_target:
        mode = rng.choice(("share", "share", "bridge", "triangle"))
        anchor = rng.randrange(count)
        if mode == "share":
            new_block(anchor)
        elif mode == "bridge":
            edges.append((anchor, rng.choice(new_block())))
        else:
            y = rng.choice(new_block())
            z = rng.choice(new_block())
            edges += [(anchor, y), (anchor, z), (y, z)]
    return from_edge_list(edges, n=count)


def planted_graph(
    rng: random.Random,
    sizes: list[int],
    k: int,
    *,
    thin: int = 2,
    links: str = "sparse",
    cross: int = 0,
) -> Graph:
    """Disjoint dense communities (cliques minus ``thin`` random matchings)
    with optional links between them.

    ``links``: ``"none"``; ``"sparse"`` puts k-1 disjoint edges between
    consecutive communities (so the whole graph is not k-connected);
    ``"spine"`` joins every community to a shared K_{k-1}; ``"random"`` adds
    ``cross`` uniformly random edges between different communities.
    """
    edges: list[tuple[int, int]] = []
    groups: list[list[int]] = []
    start = 0
    for m in sizes:
        vs = list(range(start, start + m))
        start += m
        groups.append(vs)
        removed = set()
        for _ in range(thin):
            perm = vs[:]
            rng.shuffle(perm)
            for a, b in zip(perm[::2], perm[1::2]):
                removed.add((min(a, b), max(a, b)))
        edges += [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if (u, v) not in removed]
    n = start
    if links == "sparse":
        for a, b in zip(groups, groups[1:]):
            left = rng.sample(a, k - 1)
            right = rng.sample(b, k - 1)
            edges += list(zip(left, right))
    elif links == "spine":
        spine = list(range(n, n + k - 1))
        n += k - 1
        edges += [(u, v) for i, u in enumerate(spine) for v in spine[i + 1:]]
        edges += [(s, v) for s in spine for vs in groups for v in vs]
    elif links == "random":
        owner = {v: i for i, vs in enumerate(groups) for v in vs}
        added = 0
        while added < cross and len(groups) > 1:
            u, v = rng.randrange(n), rng.randrange(n)
            if owner[u] != owner[v]:
                edges.append((u, v))
                added += 1
    elif links != "none":
        raise ValueError(f"unknown link mode {links!r}")
    return from_edge_list(edges, n=n)


def meets_sqrt_degree(g: Graph) -> bool:
    d = min_degree(g)
    return d * d >= g.n


def meets_greedy_degree(g: Graph, k: int, c_gamma: Fraction = Fraction(2123, 180)) -> bool:
    d = min_degree(g)
    return d * d >= c_gamma * (k - 1) * g.n
