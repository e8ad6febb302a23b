"""Exhaustive reference implementations for small graphs.

Everything here works straight from the definitions on bitmasks and shares
no code with the fast algorithms it is used to check. The size guards are
hard errors so a test never silently runs for hours.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import DomainError
from .graph import Graph

__all__ = [
    "brute_vertex_connectivity",
    "brute_is_k_connected",
    "brute_has_k_connected_subgraph",
    "brute_k_connected_subsets",
    "brute_min_k_proper_partition",
    "brute_e_k_n",
]


def _masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for w in g.adj[v]:
            m |= 1 << w
        out.append(m)
    return out


def _connected(nbr: list[int], mask: int) -> bool:
    if mask == 0:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = low.bit_length() - 1
        fresh = nbr[v] & mask & ~seen
        seen |= fresh
        frontier |= fresh
    return seen == mask


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _k_connected_mask(nbr: list[int], mask: int, k: int) -> bool:
    """Removing any fewer than k vertices of ``mask`` leaves a connected set
    of at least two vertices."""
    members = _bits(mask)
    if len(members) < k + 1:
        return False
    for size in range(k):
        for removed in combinations(members, size):
            rest = mask
            for v in removed:
                rest &= ~(1 << v)
            if not _connected(nbr, rest):
                return False
    return True


def brute_vertex_connectivity(g: Graph) -> int:
    """Smallest |S| such that G - S is disconnected or has < 2 vertices."""
    if g.n > 16:
        raise DomainError("brute_vertex_connectivity is limited to n <= 16")
    nbr = _masks(g)
    full = (1 << g.n) - 1
    for size in range(g.n + 1):
        for removed in combinations(range(g.n), size):
            rest = full
            for v in removed:
                rest &= ~(1 << v)
            if g.n - size < 2 or not _connected(nbr, rest):
                return size
    raise AssertionError("unreachable")


def brute_is_k_connected(g: Graph, k: int) -> bool:
    if g.n > 16:
        raise DomainError("brute_is_k_connected is limited to n <= 16")
    return _k_connected_mask(_masks(g), (1 << g.n) - 1, k)


def _edges_in(nbr: list[int], mask: int) -> int:
    return sum(bin(nbr[v] & mask).count("1") for v in _bits(mask)) // 2


def brute_k_connected_subsets(g: Graph, k: int, must_contain: int | None = None) -> list[tuple[int, ...]]:
    """Every vertex set inducing a k-connected subgraph."""
    if g.n > 14:
        raise DomainError("subset enumeration is limited to n <= 14")
    nbr = _masks(g)
    out = []
    for mask in range(1, 1 << g.n):
        if must_contain is not None and not mask >> must_contain & 1:
            continue
        if _k_connected_mask(nbr, mask, k):
            out.append(tuple(_bits(mask)))
    return out


def brute_has_k_connected_subgraph(
    g: Graph, k: int, must_contain: int | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """Whether some vertex set induces a k-connected subgraph, with a largest
    one (ties: more edges, then lexicographically smallest)."""
    if g.n > 14:
        raise DomainError("brute_has_k_connected_subgraph is limited to n <= 14")
    nbr = _masks(g)
    for size in range(g.n, k, -1):
        best = None
        for combo in combinations(range(g.n), size):
            if must_contain is not None and must_contain not in combo:
                continue
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _k_connected_mask(nbr, mask, k):
                key = _edges_in(nbr, mask)
                if best is None or key > best[0]:
                    best = (key, combo)
        if best is not None:
            return True, best[1]
    return False, None


def brute_min_k_proper_partition(g: Graph, k: int) -> tuple[int, list[tuple[int, ...]]] | None:
    """Minimum number of parts over all k-proper partitions, with a witness;
    None when no k-proper partition exists.

    Set partitions are enumerated in canonical order (the block holding the
    smallest uncovered vertex is fixed first), memoized on the uncovered set.
    """
    if g.n > 10:
        raise DomainError("brute_min_k_proper_partition is limited to n <= 10")
    if g.n == 0:
        return 0, []
    nbr = _masks(g)
    good = [m for m in range(1, 1 << g.n) if _k_connected_mask(nbr, m, k)]

    @lru_cache(maxsize=None)
    def best(rest: int) -> tuple[int, tuple[int, ...]] | None:
        if rest == 0:
            return (0, ())
        low = rest & -rest
        answer = None
        for part in good:
            if part & low and part & rest == part:
                sub = best(rest & ~part)
                if sub is not None and (answer is None or sub[0] + 1 < answer[0]):
                    answer = (sub[0] + 1, (part,) + sub[1])
        return answer

    result = best((1 << g.n) - 1)
    if result is None:
        return None
    return result[0], [tuple(_bits(p)) for p in result[1]]


def brute_e_k_n(k: int, n: int) -> int:
    """Maximum edge count of an n-vertex graph with no k-connected subgraph,
    by scanning all labelled graphs from the densest down."""
    if n > 7:
        raise DomainError("brute_e_k_n is limited to n <= 7")
    pairs = list(combinations(range(n), 2))
    for m in range(len(pairs), -1, -1):
        for chosen in combinations(range(len(pairs)), m):
            nbr = [0] * n
            for idx in chosen:
                u, v = pairs[idx]
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
            if not any(
                _k_connected_mask(nbr, mask, k) for mask in range(1, 1 << n)
            ):
                return m
    raise AssertionError("unreachable")
