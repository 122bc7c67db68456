"""
Edge-list and DOT documents, JSON result documents and CSV tables.
"""

import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from core.digraph import UNREACHABLE, Digraph, DistanceMatrix, build_digraph, distance_matrix
from core.exceptions import DigraphError, SpecParseError
from core.orientation_search import (
    OrdReport,
    UndirectedGraph,
    complete_graph,
    cycle_graph,
    fan_graph,
    underlying_graph,
    wheel_graph,
)
from core.resolver import BasisResult, representation

logger = logging.getLogger(__name__)

INF_TOKEN = "INF"


def parse_digraph(text: str) -> Digraph:
    """
    Parse an edge-list document.

    The first non-comment line is "n m", followed by m lines "u v".
    Lines starting with "#" are ignored, except "# label <id> <name>"
    which names a vertex.

    Args:
        text: Document text

    Returns:
        Digraph

    Raises:
        DigraphError: malformed header, bad token, wrong arc count or
            an invalid arc
    """
    labels: Dict[int, str] = {}
    header = None
    arcs = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and parts[0] == "label" and parts[1].lstrip("-").isdigit():
                labels[int(parts[1])] = parts[2]
            continue

        tokens = line.split()
        if len(tokens) != 2:
            what = "header 'n m'" if header is None else "arc 'u v'"
            raise DigraphError(f"line {lineno}: expected {what}, got '{line}'")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise DigraphError(f"line {lineno}: non-integer token in '{line}'") from None

        if header is None:
            if a < 1 or b < 0:
                raise DigraphError(f"line {lineno}: bad header '{line}'")
            header = (a, b)
        else:
            arcs.append((a, b))

    if header is None:
        raise DigraphError("missing header line 'n m'")
    n, m = header
    if len(arcs) != m:
        raise DigraphError(f"header announces {m} arcs, found {len(arcs)}")

    names = None
    if labels:
        if set(labels) != set(range(n)):
            raise DigraphError("label comments must name every vertex 0..n-1 exactly once")
        names = [labels[v] for v in range(n)]

    return build_digraph(n, arcs, names)


def serialize_digraph(digraph: Digraph) -> str:
    """Edge-list document with label comments; arcs in lexicographic order."""
    lines = []
    if digraph.labels is not None:
        lines.extend(f"# label {v} {name}" for v, name in enumerate(digraph.labels))
    lines.append(f"{digraph.n} {len(digraph.arcs)}")
    lines.extend(f"{u} {v}" for u, v in digraph.arcs)
    return "\n".join(lines) + "\n"


def to_dot(digraph: Digraph, name: str = "") -> str:
    """DOT document; vertex labels are emitted when the digraph has them."""
    lines = ["digraph {" if not name else f'digraph "{name}" {{']
    if digraph.labels is not None:
        lines.extend(f'  {v} [label="{label}"];' for v, label in enumerate(digraph.labels))
    lines.extend(f"  {u} -> {v};" for u, v in digraph.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_digraph(path: str) -> Digraph:
    if not os.path.exists(path):
        raise DigraphError(f"edge-list file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_digraph(f.read())


def encode_distance(value: int) -> Any:
    """Distances for documents: the sentinel becomes "INF"."""
    return INF_TOKEN if value == UNREACHABLE else int(value)


def basis_document(
    digraph: Digraph,
    result: BasisResult,
    dm: Optional[DistanceMatrix] = None,
) -> Dict[str, Any]:
    """
    Result record for one dimension computation.

    Args:
        digraph: Solved digraph
        result: Solver output
        dm: Its distance matrix (computed when omitted)

    Returns:
        JSON-ready dictionary
    """
    if dm is None:
        dm = distance_matrix(digraph)
    doc: Dict[str, Any] = {
        "n": digraph.n,
        "arcs": [list(arc) for arc in digraph.arcs],
        "mode": result.mode,
        "dimension": result.dimension,
        "basis": list(result.basis),
    }
    if digraph.labels is not None:
        doc["labels"] = list(digraph.labels)
        doc["basis_labels"] = [digraph.label(b) for b in result.basis]
    if result.all_min_bases is not None:
        doc["all_min_bases"] = [list(b) for b in result.all_min_bases]
    doc["representations"] = [
        {
            "vertex": v,
            "label": digraph.label(v),
            "vector": [encode_distance(d) for d in representation(dm, v, result.basis).vector],
        }
        for v in range(digraph.n)
    ]
    return doc


def write_document(document: Any, out: Optional[str] = None, indent: int = 2) -> None:
    """
    Write a JSON document to a file or to standard output.

    Args:
        document: JSON-ready data
        out: Output path (None for stdout)
        indent: JSON indent
    """
    text = json.dumps(document, indent=indent)
    write_text(text + "\n", out)


def write_text(text: str, out: Optional[str] = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out_dir = os.path.dirname(out)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    with open(out, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info("Wrote %s", out)


def rows_to_frame(rows: Sequence[Any]) -> pd.DataFrame:
    """Verification rows as a DataFrame, one column per row field."""
    records = []
    for row in rows:
        record = row.to_dict()
        record["params"] = ",".join(
            f"{k}={'+'.join(map(str, v)) if isinstance(v, list) else v}"
            for k, v in record["params"].items()
        )
        record["basis"] = " ".join(str(b) for b in record["basis"])
        records.append(record)
    return pd.DataFrame.from_records(records)


def write_rows_csv(rows: Sequence[Any], path: str) -> None:
    rows_to_frame(rows).to_csv(path, index=False)
    logger.info("Wrote %d verification rows to %s", len(rows), path)


def ord_log_frame(report: OrdReport) -> pd.DataFrame:
    """Per-orientation log (mask, strong, dimension) as a DataFrame."""
    return pd.DataFrame(
        {
            "mask": [row.mask for row in report.log],
            "strong": [row.strong for row in report.log],
            "dimension": pd.array([row.dimension for row in report.log], dtype="Int64"),
        }
    )


def write_ord_log_csv(report: OrdReport, path: str) -> None:
    ord_log_frame(report).to_csv(path, index=False)
    logger.info("Wrote %d orientation rows to %s", len(report.log), path)


def parse_graph_spec(text: str) -> UndirectedGraph:
    """
    Undirected graph from "wheel:N", "fan:M:N", "cycle:N", "complete:N" or an
    edge-list file (arc directions ignored).

    Args:
        text: Graph spec or path

    Returns:
        UndirectedGraph
    """
    kind, _, rest = text.partition(":")
    builders = {
        "wheel": (wheel_graph, 1),
        "cycle": (cycle_graph, 1),
        "complete": (complete_graph, 1),
        "fan": (fan_graph, 2),
    }
    if kind in builders and rest:
        builder, arity = builders[kind]
        parts = rest.split(":")
        if len(parts) != arity:
            raise SpecParseError(f"'{kind}' takes {arity} size parameter(s), got '{text}'")
        try:
            sizes: List[int] = [int(p) for p in parts]
        except ValueError:
            raise SpecParseError(f"non-integer size in graph spec '{text}'") from None
        return builder(*sizes)

    if os.path.exists(text):
        return underlying_graph(read_digraph(text), name=os.path.basename(text))
    raise SpecParseError(
        f"'{text}' is neither a graph spec (wheel:N, fan:M:N, cycle:N, complete:N) nor a file"
    )
