"""Greedy k-proper partitions.

Repeatedly take a largest k-connected subgraph H_i of the current graph G_i
and continue with G_{i+1} = G_i - V(H_i). A largest such subgraph is
absorption-maximal (no outside vertex has k neighbors in it), so each
remaining vertex loses at most k-1 neighbors per round; that is what the
part-count bound rests on.

Finding H_i: every k-connected subgraph lies in the k-core, and if the core
has a separator S with |S| < k, every k-connected subgraph lies inside
C + S for a single component C of core - S. Recursing on those branches
and keeping the largest k-connected core found is therefore exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Sequence

from .connectivity import connected_components, is_k_connected, k_core_vertices
from .errors import DomainError, Infeasible
from .graph import Graph, induced_subgraph, min_degree, remove_vertices
from .partition import Partition, check_partition

__all__ = [
    "GreedyParams",
    "TraceRow",
    "GreedyTrace",
    "Bound",
    "BoundReport",
    "k_proper_partition_greedy",
    "extract_max_k_connected",
    "search_k_connected",
    "absorb_to_maximality",
    "bound_report",
    "DEFAULT_GAMMA",
    "MIN_C",
]

DEFAULT_GAMMA = Fraction(193, 60)
MIN_C = Fraction(11, 3)


@dataclass(frozen=True)
class GreedyParams:
    k: int = 2
    c: Fraction = MIN_C
    gamma: Fraction = DEFAULT_GAMMA

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.k < 2:
            raise DomainError("k must be at least 2")
        if self.c < MIN_C:
            raise DomainError(f"c must be at least 11/3, got {self.c}")
        if self.gamma <= 0:
            raise DomainError("gamma must be positive")

    @property
    def c_gamma(self) -> Fraction:
        return self.c * self.gamma


@dataclass(frozen=True)
class TraceRow:
    i: int
    n: int
    delta: int
    size: int


@dataclass
class GreedyTrace:
    k: int
    rows: list[TraceRow] = field(default_factory=list)
    final_state: str = "exhausted"

    def violations(self) -> list[str]:
        """Rows breaking the order or degree-loss recurrences."""
        out = []
        for a, b in zip(self.rows, self.rows[1:]):
            if b.n != a.n - a.size:
                out.append(f"row {b.i}: n={b.n} but expected {a.n - a.size}")
            if b.delta < a.delta - (self.k - 1):
                out.append(f"row {b.i}: delta dropped from {a.delta} to {b.delta}")
        return out


# ---------------------------------------------------------------------------
# extraction

def _better(a: tuple[int, int, tuple[int, ...]], b: tuple[int, int, tuple[int, ...]] | None) -> bool:
    # larger order, then more edges, then lexicographically smaller set
    if b is None:
        return True
    if a[0] != b[0]:
        return a[0] > b[0]
    if a[1] != b[1]:
        return a[1] > b[1]
    return a[2] < b[2]


def search_k_connected(g: Graph, k: int) -> tuple[int, ...] | None:
    """A largest vertex set of ``g`` inducing a k-connected subgraph, or None
    if there is none."""
    if k < 1:
        raise DomainError("k must be at least 1")
    best: tuple[int, int, tuple[int, ...]] | None = None
    stack = [tuple(range(g.n))]
    seen: set[tuple[int, ...]] = set()
    while stack:
        branch = stack.pop()
        sub = induced_subgraph(g, branch)
        core = tuple(branch[v] for v in k_core_vertices(sub, k))
        if len(core) < k + 1 or core in seen:
            continue
        if best is not None and len(core) < best[0]:
            continue
        seen.add(core)
        h = induced_subgraph(g, core)
        cert = is_k_connected(h, k)
        if cert.confirmed:
            cand = (len(core), h.m, core)
            if _better(cand, best):
                best = cand
            continue
        cut = cert.witness_cut
        cut_ids = [core[v] for v in cut]
        for comp in connected_components(h, cut):
            stack.append(tuple(sorted([core[v] for v in comp] + cut_ids)))
    return None if best is None else best[2]


def absorb_to_maximality(g: Graph, h: Sequence[int], k: int) -> tuple[int, ...]:
    """Grow ``h`` by any outside vertex with at least ``k`` neighbors inside
    until none is left. A k-connected set stays k-connected."""
    inside = bytearray(g.n)
    for v in h:
        inside[v] = 1
    hits = [0] * g.n
    for v in h:
        for w in g.adj[v]:
            hits[w] += 1
    queue = [v for v in range(g.n) if not inside[v] and hits[v] >= k]
    while queue:
        v = queue.pop()
        if inside[v]:
            continue
        inside[v] = 1
        for w in g.adj[v]:
            hits[w] += 1
            if not inside[w] and hits[w] >= k:
                queue.append(w)
    return tuple(v for v in range(g.n) if inside[v])


def extract_max_k_connected(g: Graph, k: int) -> tuple[int, ...] | None:
    if k < 2:
        raise DomainError("k must be at least 2")
    h = search_k_connected(g, k)
    if h is None:
        return None
    return absorb_to_maximality(g, h, k)


# ---------------------------------------------------------------------------
# the partitioner

def k_proper_partition_greedy(g: Graph, params: GreedyParams | None = None) -> tuple[Partition, GreedyTrace]:
    """Greedy k-proper partition with its per-round trace.

    Raises :class:`Infeasible` (carrying the partial partition, the stuck
    remainder and the trace) when a nonempty remainder has no k-connected
    subgraph.
    """
    params = params or GreedyParams()
    k = params.k
    trace = GreedyTrace(k)
    parts: list[tuple[int, ...]] = []
    cur = g.with_identity_origin()
    i = 0
    while cur.n:
        delta = min_degree(cur)
        h = extract_max_k_connected(cur, k)
        if h is None:
            trace.final_state = "failed_extraction"
            raise Infeasible(
                "no-k-connected-subgraph",
                f"{cur.n} remaining vertices contain no {k}-connected subgraph",
                witness=cur.origin,
                partial=tuple(parts),
                remainder=cur.origin,
                trace=trace,
            )
        trace.rows.append(TraceRow(i, cur.n, delta, len(h)))
        parts.append(tuple(cur.origin[v] for v in h))
        if len(h) == cur.n:
            trace.final_state = "final_k_connected"
            break
        cur = remove_vertices(cur, h)
        i += 1
    check = check_partition(g, parts, k)
    if not check.ok:
        raise Infeasible(
            "certification",
            "a greedy part failed independent certification",
            partial=tuple(parts),
            trace=trace,
        )
    return Partition(tuple(parts), k, check.certificates, "greedy"), trace


# ---------------------------------------------------------------------------
# bound arithmetic

@dataclass(frozen=True)
class Bound:
    """One sufficient condition and the part-count ceiling it guarantees.

    ``condition`` is a human-readable inequality; ``ceiling`` the exact
    (rational) ceiling when one exists and ``limit`` its floor.
    """

    name: str
    condition: str
    holds: bool
    ceiling: Fraction | None
    limit: int


@dataclass(frozen=True)
class BoundReport:
    n: int
    delta: int
    k: int
    bounds: tuple[Bound, ...]
    rounds: int | None

    def get(self, name: str) -> Bound:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)


def _floor_sqrt(q: Fraction) -> int:
    # floor(sqrt(q)) == isqrt(floor(q)) for q >= 0
    return isqrt(floor(q))


def bound_report(n: int, delta: int, params: GreedyParams | None = None) -> BoundReport:
    """Evaluate the minimum-degree conditions and part-count ceilings.

    * ``greedy``: delta^2 >= c*gamma*(k-1)*n gives at most floor(c*gamma*n/delta) parts;
    * ``greedy_default``: the same with c*gamma = 2123/180;
    * ``tradeoff``: delta^2 >= (193/30)(k-1)n gives at most
      floor(sqrt(k*c_k*n)/(k-1)) parts with c_k = (k-1)/k * 2*gamma;
    * ``block_tree`` (k = 2 only): delta^2 >= n gives at most floor((n-1)/delta);
    * ``conjectured``: delta^2 >= (k-1)n with ceiling (n-k+1)/(delta-k+2),
      which is not a proven guarantee for k >= 3.

    ``rounds`` is ceil(c*gamma*n/delta - 4), the round count the greedy
    analysis works with.
    """
    params = params or GreedyParams()
    if n < 1 or delta < 1:
        raise DomainError("n and delta must be positive")
    k = params.k
    cg = params.c_gamma
    sq = delta * delta
    bounds = []

    ceiling = cg * n / delta
    bounds.append(Bound("greedy", f"delta^2 >= {cg}*(k-1)*n", sq >= cg * (k - 1) * n, ceiling, floor(ceiling)))

    yc = MIN_C * DEFAULT_GAMMA
    ceiling = yc * n / delta
    bounds.append(Bound("greedy_default", f"delta^2 >= {yc}*(k-1)*n", sq >= yc * (k - 1) * n, ceiling, floor(ceiling)))

    ck = Fraction(k - 1, k) * 2 * params.gamma
    # (k/(k-1)) * sqrt(c_k n / k) = sqrt(k c_k n) / (k-1)
    square = k * ck * n / (k - 1) ** 2
    bounds.append(Bound("tradeoff", f"delta^2 >= {k * ck}*n", sq >= k * ck * n, None, _floor_sqrt(square)))

    if k == 2:
        ceiling = Fraction(n - 1, delta)
        bounds.append(Bound("block_tree", "delta^2 >= n", sq >= n, ceiling, floor(ceiling)))

    if delta - k + 2 > 0:
        ceiling = Fraction(n - k + 1, delta - k + 2)
        bounds.append(Bound("conjectured", "delta^2 >= (k-1)*n", sq >= (k - 1) * n, ceiling, floor(ceiling)))

    rounds = ceil(cg * n / delta - 4)
    return BoundReport(n, delta, k, tuple(bounds), rounds)
