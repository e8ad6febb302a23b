"""Partition and verification reports.

A report is first assembled as a plain dict (the JSON sidecar schema) and
then rendered as text. The text form is line oriented: metadata lines start
with ``#`` and every other line lists the labels of one part, so a report
can be fed back as a partition file.

Sidecar schema::

    {"kind": "partition" | "verification",
     "status": "ok" | "infeasible" | "refuted",
     "k": int, "method": str, "n": int, "m": int, "min_degree": int | null,
     "parts": [[label, ...], ...],
     "certificates": [{"verdict": str, "method": str, "witness_cut": [label] | null}],
     "trace": {"final_state": str, "rows": [{"i", "n", "delta", "size"}],
               "violations": [str]} | null,
     "bounds": {"rounds": int | null,
                "items": [{"name", "condition", "holds", "ceiling", "limit"}]} | null,
     "infeasibility": {"step", "detail", "witness", "partial", "remainder"} | null,
     "cover": {"missing": [label], "repeated": [label]} | null}

Rationals are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Sequence

from .connectivity import ConnectivityCertificate
from .errors import Infeasible
from .graph import Graph, min_degree
from .greedy import BoundReport, GreedyTrace
from .partition import Partition, PartitionCheck

__all__ = ["partition_report", "verification_report", "render_text", "render_json"]


def _label(g: Graph, v: int) -> Any:
    x = g.labels[v]
    return x if isinstance(x, (int, str)) else str(x)


def _labels(g: Graph, vs: Iterable[int] | None) -> list[Any] | None:
    if vs is None:
        return None
    return [_label(g, v) for v in vs]


def _cert(g: Graph, c: ConnectivityCertificate) -> dict[str, Any]:
    return {"verdict": c.verdict, "method": c.method, "witness_cut": _labels(g, c.witness_cut)}


def _trace(t: GreedyTrace | None) -> dict[str, Any] | None:
    if t is None:
        return None
    return {
        "final_state": t.final_state,
        "rows": [{"i": r.i, "n": r.n, "delta": r.delta, "size": r.size} for r in t.rows],
        "violations": t.violations(),
    }


def _bounds(b: BoundReport | None) -> dict[str, Any] | None:
    if b is None:
        return None
    items = [
        {
            "name": x.name,
            "condition": x.condition,
            "holds": x.holds,
            "ceiling": None if x.ceiling is None else str(x.ceiling),
            "limit": x.limit,
        }
        for x in b.bounds
    ]
    return {"rounds": b.rounds, "items": items}


def _base(kind: str, g: Graph, k: int, method: str) -> dict[str, Any]:
    return {
        "kind": kind,
        "status": "ok",
        "k": k,
        "method": method,
        "n": g.n,
        "m": g.m,
        "min_degree": min_degree(g) if g.n else None,
        "parts": [],
        "certificates": [],
        "trace": None,
        "bounds": None,
        "infeasibility": None,
        "cover": None,
    }


def partition_report(
    g: Graph,
    k: int,
    method: str,
    *,
    partition: Partition | None = None,
    failure: Infeasible | None = None,
    trace: GreedyTrace | None = None,
    bounds: BoundReport | None = None,
) -> dict[str, Any]:
    rep = _base("partition", g, k, method)
    rep["trace"] = _trace(trace if trace is not None else getattr(failure, "trace", None))
    rep["bounds"] = _bounds(bounds)
    if partition is not None:
        rep["parts"] = [_labels(g, p) for p in partition.parts]
        rep["certificates"] = [_cert(g, c) for c in partition.certificates]
    if failure is not None:
        rep["status"] = "infeasible"
        rep["infeasibility"] = {
            "step": failure.step,
            "detail": failure.detail,
            "witness": _labels(g, failure.witness),
            "partial": [_labels(g, p) for p in failure.partial],
            "remainder": _labels(g, failure.remainder),
        }
    return rep


def verification_report(g: Graph, parts: Sequence[Sequence[int]], check: PartitionCheck, k: int) -> dict[str, Any]:
    rep = _base("verification", g, k, "verify")
    rep["parts"] = [_labels(g, p) for p in parts]
    rep["certificates"] = [_cert(g, c) for c in check.certificates]
    rep["cover"] = {"missing": _labels(g, check.missing), "repeated": _labels(g, check.repeated)}
    if not check.ok:
        rep["status"] = "refuted"
    return rep


def _words(xs: Iterable[Any]) -> str:
    return " ".join(str(x) for x in xs)


def render_text(rep: dict[str, Any], *, trace: bool = True) -> str:
    out = [
        f"# {rep['kind']} report",
        f"# status: {rep['status']}",
        f"# k: {rep['k']}",
        f"# method: {rep['method']}",
        f"# graph: n={rep['n']} m={rep['m']} min_degree={rep['min_degree']}",
        f"# parts: {len(rep['parts'])}",
    ]
    for i, (part, cert) in enumerate(zip(rep["parts"], rep["certificates"])):
        line = f"# part {i}: size={len(part)} {cert['verdict']} via {cert['method']}"
        if cert["witness_cut"] is not None:
            line += f" cut=[{_words(cert['witness_cut'])}]"
        out.append(line)
    cover = rep.get("cover")
    if cover is not None:
        out.append(f"# missing: [{_words(cover['missing'])}]")
        out.append(f"# repeated: [{_words(cover['repeated'])}]")
    bad = rep.get("infeasibility")
    if bad is not None:
        out.append(f"# step: {bad['step']}")
        out.append(f"# detail: {bad['detail']}")
        out.append(f"# witness: [{_words(bad['witness'])}]")
        out.append(f"# remainder: [{_words(bad['remainder'])}]")
        for p in bad["partial"]:
            out.append(f"# partial: {_words(p)}")
    t = rep.get("trace")
    if trace and t is not None:
        out.append(f"# trace: final_state={t['final_state']}")
        out.append("# trace:     i      n_i  delta_i    |H_i|")
        for r in t["rows"]:
            out.append(f"# trace: {r['i']:5d} {r['n']:8d} {r['delta']:8d} {r['size']:8d}")
        for v in t["violations"]:
            out.append(f"# trace violation: {v}")
    b = rep.get("bounds")
    if b is not None:
        for x in b["items"]:
            holds = "holds" if x["holds"] else "fails"
            ceiling = "" if x["ceiling"] is None else f" ceiling={x['ceiling']}"
            out.append(f"# bound {x['name']}: {x['condition']} {holds}{ceiling} limit={x['limit']}")
        out.append(f"# rounds: {b['rounds']}")
    out += [_words(p) for p in rep["parts"]]
    return "\n".join(out) + "\n"


def render_json(rep: dict[str, Any]) -> str:
    return json.dumps(rep, indent=2, sort_keys=True) + "\n"
