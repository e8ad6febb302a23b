"""Edge-list, DIMACS and partition file formats.

Edge list::

    # comment
    n 6          optional header: vertex count (integer-id graphs)
    0 1          one edge per line
    5            a single token declares an isolated vertex

Integer tokens are used as vertex ids directly. If any token is not a
nonnegative integer, all tokens are treated as names and numbered in sorted
order. DIMACS uses ``c`` comments, one ``p edge n m`` line and 1-based
``e u v`` lines; vertex ``i`` gets label ``i``.

A partition file lists one part per line as whitespace-separated vertex
labels, with ``#`` comments.

Serializers emit canonical text, so ``serialize(parse(text)) == text`` for
any text a serializer produced.
"""

from __future__ import annotations

from typing import Iterable, Sequence, TextIO

from .errors import FormatError
from .graph import Graph, from_adjacency, from_edge_list

__all__ = [
    "parse_edgelist",
    "serialize_edgelist",
    "parse_dimacs",
    "serialize_dimacs",
    "parse_graph",
    "serialize_graph",
    "read_graph",
    "parse_partition",
    "serialize_partition",
    "FORMATS",
]

FORMATS = ("edgelist", "dimacs")


def _strip_comment(line: str, marker: str = "#") -> str:
    cut = line.find(marker)
    return (line if cut < 0 else line[:cut]).strip()


def _is_id(token: str) -> bool:
    return token.isascii() and token.isdigit()


def parse_edgelist(text: str) -> Graph:
    header: int | None = None
    header_line = 0
    edges: list[tuple[str, str]] = []
    singles: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 2 and tokens[0] == "n":
            if header is not None:
                raise FormatError("duplicate 'n' header", lineno)
            if not _is_id(tokens[1]):
                raise FormatError(f"bad vertex count {tokens[1]!r}", lineno)
            header, header_line = int(tokens[1]), lineno
        elif len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise FormatError(f"self-loop at vertex {tokens[0]!r}", lineno)
            edges.append((tokens[0], tokens[1]))
        elif len(tokens) == 1:
            singles.append(tokens[0])
        else:
            raise FormatError(f"expected 'u v', got {line!r}", lineno)

    numeric = all(_is_id(t) for e in edges for t in e) and all(_is_id(t) for t in singles)
    if numeric:
        int_edges = [(int(u), int(v)) for u, v in edges]
        ids = [x for e in int_edges for x in e] + [int(t) for t in singles]
        count = max(ids, default=-1) + 1
        if header is not None:
            if header < count:
                raise FormatError(f"header says n={header} but vertex {count - 1} appears", header_line)
            count = header
        rows: list[set[int]] = [set() for _ in range(count)]
        for u, v in int_edges:
            rows[u].add(v)
            rows[v].add(u)
        return from_adjacency(rows)
    try:
        return from_edge_list(edges, n=header, vertices=singles)
    except ValueError as exc:
        raise FormatError(str(exc), header_line or None) from None


def _string_labelled(g: Graph) -> bool:
    return tuple(g.labels) != tuple(range(g.n)) and not all(
        isinstance(x, int) for x in g.labels
    )


def serialize_edgelist(g: Graph) -> str:
    """Canonical edge-list text.

    String-labelled graphs are written with their labels, all others with
    dense ids.
    """
    out = [f"n {g.n}"]
    if _string_labelled(g):
        name = [str(x) for x in g.labels]
        out.extend(f"{name[u]} {name[v]}" for u, v in g.edges())
        out.extend(name[v] for v in range(g.n) if not g.adj[v])
    else:
        out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_dimacs(text: str) -> Graph:
    n: int | None = None
    rows: list[set[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise FormatError("duplicate problem line", lineno)
            if len(tokens) != 4 or not (_is_id(tokens[2]) and _is_id(tokens[3])):
                raise FormatError(f"expected 'p edge n m', got {line!r}", lineno)
            n = int(tokens[2])
            rows = [set() for _ in range(n)]
        elif tokens[0] == "e":
            if n is None:
                raise FormatError("edge before problem line", lineno)
            if len(tokens) != 3 or not (_is_id(tokens[1]) and _is_id(tokens[2])):
                raise FormatError(f"expected 'e u v', got {line!r}", lineno)
            u, v = int(tokens[1]), int(tokens[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", lineno)
            rows[u - 1].add(v - 1)
            rows[v - 1].add(u - 1)
        else:
            raise FormatError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise FormatError("missing 'p edge n m' line")
    return from_adjacency(rows, labels=range(1, n + 1))


def serialize_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return serialize_edgelist(g)
    if fmt == "dimacs":
        return serialize_dimacs(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def read_graph(stream: TextIO, fmt: str = "edgelist") -> Graph:
    return parse_graph(stream.read(), fmt)


def parse_partition(text: str, g: Graph) -> list[tuple[int, ...]]:
    """Parts as tuples of vertex ids of ``g``, resolved through its labels."""
    index = {str(label): v for v, label in enumerate(g.labels)}
    parts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        part = []
        for token in line.split():
            if token not in index:
                raise FormatError(f"unknown vertex {token!r}", lineno)
            part.append(index[token])
        parts.append(tuple(part))
    return parts


def serialize_partition(g: Graph, parts: Iterable[Sequence[int]]) -> str:
    return "".join(" ".join(str(g.labels[v]) for v in part) + "\n" for part in parts)


def labels_text(g: Graph, vs: Iterable[int]) -> str:
    return " ".join(str(x) for x in g.label_of(vs))
