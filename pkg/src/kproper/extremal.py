"""Tightness constructions for k-proper partitions.

``apex_counterexample(k, l, p)``: p disjoint copies of K_l plus one apex
vertex joined to the first k-1 vertices of every copy. No k-connected
subgraph contains the apex, so no k-proper partition exists although the
minimum degree can be made about sqrt((k-1)n).

``join_tightness(k, r, s)``: s disjoint copies of K_r joined to a K_{k-1}.
Minimum degree r+k-2; every k-proper partition has at least s parts.

Parameters are free integers. The algebraic relations that make these
graphs extremal are reported by :func:`coupling`, not enforced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import Graph, complete_graph, disjoint_union, from_edge_list, join

__all__ = ["ExtremalSpec", "apex_counterexample", "apex_vertex", "join_tightness", "coupling"]


@dataclass(frozen=True)
class ExtremalSpec:
    kind: str
    k: int
    a: int
    b: int

    def build(self) -> Graph:
        if self.kind == "apex":
            return apex_counterexample(self.k, self.a, self.b)
        if self.kind == "join":
            return join_tightness(self.k, self.a, self.b)
        raise DomainError(f"unknown construction {self.kind!r}")


def apex_counterexample(k: int, l: int, p: int) -> Graph:
    if k < 2 or l < k or p < 1:
        raise DomainError("apex construction needs k >= 2, l >= k, p >= 1")
    apex = p * l
    edges = []
    for c in range(p):
        base = c * l
        edges += [(base + i, base + j) for i in range(l) for j in range(i + 1, l)]
        edges += [(base + i, apex) for i in range(k - 1)]
    return from_edge_list(edges, n=p * l + 1)


def apex_vertex(k: int, l: int, p: int) -> int:
    return p * l


def join_tightness(k: int, r: int, s: int) -> Graph:
    if k < 2 or r < 2 or s < 1:
        raise DomainError("join construction needs k >= 2, r >= 2, s >= 1")
    return join(disjoint_union([complete_graph(r)] * s), complete_graph(k - 1))


def coupling(spec: ExtremalSpec) -> dict[str, object]:
    """Whether the parameters satisfy the extremal relations.

    apex: l^2 = (k-1)(n-1) with n = pl+1, equivalently l = p(k-1).
    join: (r+k-2)^2 = (k-1)n with n = sr+k-1.
    """
    k = spec.k
    if spec.kind == "apex":
        l, p = spec.a, spec.b
        n = p * l + 1
        return {"n": n, "delta": min(l - 1, p * (k - 1)), "coupled": l * l == (k - 1) * (n - 1)}
    if spec.kind == "join":
        r, s = spec.a, spec.b
        n = s * r + k - 1
        delta = r + k - 2
        return {"n": n, "delta": delta, "coupled": delta * delta == (k - 1) * n, "min_parts": s}
    raise DomainError(f"unknown construction {spec.kind!r}")
