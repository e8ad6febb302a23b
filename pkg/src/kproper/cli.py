"""Command-line interface.

Exit codes: 0 success, 2 infeasible or refuted (a report is still written),
1 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from .augment import k_connect_by_matchings
from .blocktree import build_block_cut_tree, to_dot
from .connectivity import connected_components, is_k_connected, vertex_connectivity
from .errors import DomainError, FormatError, Infeasible
from .extremal import apex_counterexample, join_tightness
from .formats import FORMATS, labels_text, parse_graph, parse_partition, serialize_graph, serialize_partition
from .graph import Graph, induced_subgraph, min_degree
from .greedy import DEFAULT_GAMMA, MIN_C, GreedyParams, bound_report, k_proper_partition_greedy
from .oracle import brute_has_k_connected_subgraph, brute_min_k_proper_partition, brute_vertex_connectivity
from .partition import check_partition
from .report import partition_report, render_json, render_text, verification_report
from .two_proper import two_proper_partition

OK, ERROR, INFEASIBLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ERROR, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _graph(args, path: str | None = None) -> Graph:
    return parse_graph(_read(path or args.input), args.format)


# ---------------------------------------------------------------------------
# commands

def cmd_partition(args) -> int:
    g = _graph(args)
    k = args.k
    method = args.method
    if method == "auto":
        method = "block-tree" if k == 2 else "greedy"
    if method == "block-tree" and k != 2:
        raise DomainError("the block-tree method only produces 2-proper partitions")
    params = GreedyParams(k=k, c=args.c, gamma=args.gamma)
    bounds = bound_report(g.n, min_degree(g), params) if g.n and min_degree(g) > 0 else None
    part = trace = failure = None
    try:
        if method == "block-tree":
            part = two_proper_partition(g)
        else:
            part, trace = k_proper_partition_greedy(g, params)
    except Infeasible as exc:
        failure = exc
    rep = partition_report(g, k, method, partition=part, failure=failure, trace=trace, bounds=bounds)
    _write(args.output, render_text(rep, trace=args.trace))
    if args.json:
        _write(args.json, render_json(rep))
    return INFEASIBLE if failure else OK


def cmd_verify(args) -> int:
    g = _graph(args, args.graph)
    parts = parse_partition(_read(args.partition), g)
    check = check_partition(g, parts, args.k)
    rep = verification_report(g, parts, check, args.k)
    _write(args.output, render_text(rep))
    if args.json:
        _write(args.json, render_json(rep))
    return OK if check.ok else INFEASIBLE


def cmd_generate(args) -> int:
    if args.kind == "apex":
        g = apex_counterexample(args.k, args.a, args.b)
    else:
        g = join_tightness(args.k, args.a, args.b)
    _write(args.output, serialize_graph(g, args.format))
    return OK


def cmd_connectivity(args) -> int:
    g = _graph(args)
    if args.k is None:
        kappa, cut = vertex_connectivity(g)
        lines = [f"kappa: {kappa}"]
        if cut is not None:
            lines.append(f"cut: {labels_text(g, cut)}")
        _write(args.output, "\n".join(lines) + "\n")
        return OK
    cert = is_k_connected(g, args.k)
    lines = [f"k: {args.k}", f"verdict: {cert.verdict}", f"method: {cert.method}"]
    if cert.witness_cut is not None:
        lines.append(f"cut: {labels_text(g, cert.witness_cut)}")
    for path in cert.witness_paths or ():
        lines.append(f"path: {labels_text(g, path)}")
    _write(args.output, "\n".join(lines) + "\n")
    return OK if cert.confirmed else INFEASIBLE


def cmd_augment(args) -> int:
    g = _graph(args, args.graph)
    parts = parse_partition(_read(args.partition), g)
    aug = k_connect_by_matchings(g, parts, args.k)
    mark = "#" if args.format == "edgelist" else "c"
    head = [f"{mark} augmented: {len(aug.added)} edges added, {aug.certificate.verdict}"]
    head += [f"{mark} added {labels_text(g, e)}" for e in aug.added]
    _write(args.output, "\n".join(head) + "\n" + serialize_graph(aug.graph, args.format))
    return OK if aug.certificate.confirmed else INFEASIBLE


def cmd_oracle(args) -> int:
    g = _graph(args)
    if args.query == "kappa":
        _write(args.output, f"kappa: {brute_vertex_connectivity(g)}\n")
        return OK
    if args.query == "subgraph":
        found, witness = brute_has_k_connected_subgraph(g, args.k)
        text = f"has_{args.k}_connected_subgraph: {str(found).lower()}\n"
        if found:
            text += f"largest: {labels_text(g, witness)}\n"
        _write(args.output, text)
        return OK if found else INFEASIBLE
    best = brute_min_k_proper_partition(g, args.k)
    if best is None:
        _write(args.output, f"# no {args.k}-proper partition\n")
        return INFEASIBLE
    count, parts = best
    _write(args.output, f"# minimum parts: {count}\n" + serialize_partition(g, parts))
    return OK


def cmd_blocktree(args) -> int:
    g = _graph(args)
    out = []
    for comp in connected_components(g):
        if len(comp) > 1:
            out.append(to_dot(build_block_cut_tree(induced_subgraph(g, comp))))
    _write(args.output, "".join(out))
    return OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kproper", description="Partition graphs into k-connected parts.")
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp, graph_flag: str = "--input"):
        sp.add_argument(graph_flag, default="-", help="graph file, '-' for stdin")
        sp.add_argument("--format", choices=FORMATS, default="edgelist")
        sp.add_argument("--output", default=None, help="output file (default stdout)")

    sp = sub.add_parser("partition", help="compute a k-proper partition")
    io(sp)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--method", choices=("auto", "block-tree", "greedy"), default="auto")
    sp.add_argument("--c", type=_fraction, default=MIN_C)
    sp.add_argument("--gamma", type=_fraction, default=DEFAULT_GAMMA)
    sp.add_argument("--trace", action="store_true", help="include the greedy trace table")
    sp.add_argument("--json", default=None, help="write the JSON sidecar here")
    sp.set_defaults(func=cmd_partition)

    sp = sub.add_parser("verify", help="re-certify a partition")
    io(sp, "--graph")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--json", default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="emit a tightness construction")
    sp.add_argument("kind", choices=("apex", "join"))
    sp.add_argument("k", type=int)
    sp.add_argument("a", type=int, help="clique order l (apex) or r (join)")
    sp.add_argument("b", type=int, help="clique count p (apex) or s (join)")
    sp.add_argument("--format", choices=FORMATS, default="edgelist")
    sp.add_argument("--output", default=None)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("connectivity", help="vertex connectivity or a k-connectivity test")
    io(sp)
    sp.add_argument("--k", type=int, default=None)
    sp.set_defaults(func=cmd_connectivity)

    sp = sub.add_parser("augment", help="chain partition parts into a k-connected graph")
    io(sp, "--graph")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--k", type=int, default=2)
    sp.set_defaults(func=cmd_augment)

    sp = sub.add_parser("oracle", help="brute-force reference answers for small graphs")
    io(sp)
    sp.add_argument("query", choices=("kappa", "subgraph", "min-partition"))
    sp.add_argument("--k", type=int, default=2)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("blocktree", help="dump block-cut trees in DOT")
    io(sp)
    sp.set_defaults(func=cmd_blocktree)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, FormatError, OSError) as exc:
        print(f"kproper: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
