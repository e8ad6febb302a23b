"""Partitions of a vertex set and their independent certification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .connectivity import ConnectivityCertificate, is_k_connected
from .graph import Graph, induced_subgraph

__all__ = ["Partition", "PartitionCheck", "check_partition"]


@dataclass(frozen=True)
class Partition:
    """A k-proper partition of a graph's vertex set.

    ``certificates[i]`` certifies ``parts[i]`` at level ``k``; the vertices
    of the cut in a refuted certificate are ids of the whole graph.
    ``extendable`` is the minimum part size every part is known to meet,
    when the partition carries that tag.
    """

    parts: tuple[tuple[int, ...], ...]
    k: int
    certificates: tuple[ConnectivityCertificate, ...] = ()
    source: str = ""
    extendable: int | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.parts)

    def labelled(self, g: Graph) -> list[list[Hashable]]:
        return [g.label_of(p) for p in self.parts]


@dataclass(frozen=True)
class PartitionCheck:
    missing: tuple[int, ...]
    repeated: tuple[int, ...]
    certificates: tuple[ConnectivityCertificate, ...]

    @property
    def covers(self) -> bool:
        return not self.missing and not self.repeated

    @property
    def ok(self) -> bool:
        return self.covers and all(c.confirmed for c in self.certificates)


def certify_part(g: Graph, part: Sequence[int], k: int) -> ConnectivityCertificate:
    sub = induced_subgraph(g, part)
    cert = is_k_connected(sub, k)
    if cert.witness_cut:
        members = sorted(set(part))
        cert = ConnectivityCertificate(
            cert.k, cert.confirmed, tuple(members[v] for v in cert.witness_cut),
            None, cert.method,
        )
    return cert


def check_partition(g: Graph, parts: Sequence[Sequence[int]], k: int) -> PartitionCheck:
    """Re-derive cover and per-part k-connectivity from scratch."""
    count = [0] * g.n
    for part in parts:
        for v in part:
            count[v] += 1
    missing = tuple(v for v in range(g.n) if count[v] == 0)
    repeated = tuple(v for v in range(g.n) if count[v] > 1)
    certs = tuple(certify_part(g, p, k) for p in parts)
    return PartitionCheck(missing, repeated, certs)
