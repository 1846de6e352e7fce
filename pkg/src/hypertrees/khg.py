"""The ``.khg`` text format, JSON reports and DOT export.

Grammar: lines starting with ``#`` are comments; the first data line is
``k n``; every following data line lists the k vertex ids of one edge.
"""
from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any

from hypertrees.bounds import PhiTable
from hypertrees.core import Hypergraph, TightLineGraph, new_hypergraph
from hypertrees.enumeration import EnumerationStats
from hypertrees.errors import ParseError


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", lineno) from None


def parse_khg(text: str) -> Hypergraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        nums = _ints(line, lineno)
        if header is None:
            if len(nums) != 2:
                raise ParseError("header must be 'k n'", lineno)
            header = nums
            continue
        if len(nums) != header[0]:
            raise ParseError(f"expected {header[0]} vertex ids, got {len(nums)}", lineno)
        edges.append(nums)
    if header is None:
        raise ParseError("missing 'k n' header", 1)
    return new_hypergraph(header[0], header[1], edges)


def serialize_khg(H: Hypergraph, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"{H.k} {H.n}")
    lines += [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def _plain(obj: Any) -> Any:
    if isinstance(obj, PhiTable):
        return {
            "maps": [[{"edge": list(e), "image": list(img)} for e, img in phi.items()] for phi in obj.maps],
            "order": [list(e) for e in obj.order],
            "chains": [list(c) for c in obj.chains],
        }
    if isinstance(obj, EnumerationStats):
        out = {key: _plain(v) for key, v in dataclasses.asdict(obj).items()
               if key not in ("hypertree_ids", "iso_classes")}
        for key in ("min_hypertree", "max_hypertree", "max_edge_minimal", "min_edge_maximal"):
            pair = getattr(obj, key)
            out[key] = None if pair is None else {"m": pair[0], "edges": obj.witness_edges(key)}
        out["hypertree_m_histogram"] = {str(m): c for m, c in obj.hypertree_m_histogram.items()}
        out["iso_counts"] = obj.iso_counts
        return out
    if isinstance(obj, Hypergraph):
        return {"k": obj.k, "n": obj.n, "edges": [list(e) for e in obj.edges]}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {f.name: _plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for name in ("holds", "consistent", "equal"):
            if hasattr(type(obj), name) and isinstance(getattr(type(obj), name), property):
                out[name] = getattr(obj, name)
        return out
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else str(obj)
    if isinstance(obj, (frozenset, set)):
        return sorted(_plain(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    return obj


def report_dict(report: Any) -> dict:
    return _plain(report)


def emit_report(report: Any, indent: int | None = 2) -> str:
    return json.dumps(_plain(report), indent=indent, sort_keys=False)


def export_dot(G: TightLineGraph, name: str = "tight_line_graph") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  e{i + 1};" for i in range(G.node_count)]
    lines += [f"  e{i + 1} -- e{j + 1};" for i, j in G.pairs()]
    lines.append("}")
    return "\n".join(lines) + "\n"
