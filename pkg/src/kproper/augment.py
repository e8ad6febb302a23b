"""Edge additions that turn a k-proper partition into a k-connected graph.

Consecutive parts H_i, H_{i+1} are linked by a matching of size k, reusing
edges the graph already has. Deleting fewer than k vertices leaves every
part connected and at least one matching edge of every link intact, so the
result is k-connected; it is certified anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import NamedTuple, Sequence

from .connectivity import ConnectivityCertificate, is_k_connected
from .errors import DomainError
from .graph import Graph, from_adjacency
from .partition import check_partition

__all__ = ["Augmentation", "EditBound", "k_connect_by_matchings", "edit_distance_upper_bound"]


class Augmentation(NamedTuple):
    graph: Graph
    added: list[tuple[int, int]]
    certificate: ConnectivityCertificate


def _link(g: Graph, a: Sequence[int], b: Sequence[int], k: int) -> list[tuple[int, int]]:
    """New edges completing a size-k matching between parts ``a`` and ``b``."""
    in_b = set(b)
    used_a: set[int] = set()
    used_b: set[int] = set()
    matched = 0
    for u in sorted(a):
        if matched == k:
            break
        for w in g.adj[u]:
            if w in in_b and w not in used_b:
                used_a.add(u)
                used_b.add(w)
                matched += 1
                break
    free_a = [u for u in sorted(a) if u not in used_a]
    free_b = [w for w in sorted(b) if w not in used_b]
    new = []
    for u, w in zip(free_a, free_b):
        if matched == k:
            break
        new.append((u, w) if u < w else (w, u))
        matched += 1
    return new


def k_connect_by_matchings(g: Graph, parts: Sequence[Sequence[int]], k: int) -> Augmentation:
    """Augment ``g`` along the part order; at most k(l-1) edges are added."""
    check = check_partition(g, parts, k)
    if not check.ok:
        raise DomainError("partition is not a certified k-proper partition")
    added: list[tuple[int, int]] = []
    for a, b in zip(parts, parts[1:]):
        added += _link(g, a, b, k)
    rows = [set(row) for row in g.adj]
    for u, w in added:
        rows[u].add(w)
        rows[w].add(u)
    out = from_adjacency(rows, g.labels, g.origin)
    return Augmentation(out, sorted(added), is_k_connected(out, k))


@dataclass(frozen=True)
class EditBound:
    value: Fraction
    hypothesis: bool
    loose: float
    below_loose: bool


def edit_distance_upper_bound(n: int, delta: int, k: int) -> EditBound:
    """``11.8 k n / delta - k`` as an exact rational, the degree condition
    ``delta^2 >= 11.8 (k-1) n`` and the comparison with ``k(4 sqrt(n) - 1)``."""
    if n < 1 or delta < 1 or k < 1:
        raise DomainError("n, delta and k must be positive")
    coeff = Fraction(59, 5)
    value = coeff * k * n / delta - k
    hypothesis = delta * delta >= coeff * (k - 1) * n
    # value < k(4 sqrt n - 1)  <=>  11.8 n / delta < 4 sqrt n  <=>  (11.8 n/delta)^2 < 16 n
    ratio = coeff * n / delta
    below = ratio * ratio < 16 * n
    return EditBound(value, hypothesis, k * (4 * sqrt(n) - 1), below)
