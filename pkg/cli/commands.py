"""
Command implementations: gen, dim, verify and ord.

Each command takes the parsed arguments and the ConfigLoader and returns a
process exit status.
"""

import argparse
import logging
from typing import Any, Dict, Optional

from core.digraph import distance_matrix
from core.exceptions import DirDimError
from core.family_spec import FamilySpec
from core.orientation_search import compute_ord
from core.resolver import check_mode, metric_dimension
from core.verification import VerifyOptions, table_passes, verify
from utils.config_loader import ConfigLoader
from utils.graph_io import (
    basis_document,
    parse_graph_spec,
    read_digraph,
    serialize_digraph,
    to_dot,
    write_document,
    write_ord_log_csv,
    write_rows_csv,
    write_text,
)
from utils.workers import resolve_workers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3


def _mode(args: argparse.Namespace, config: ConfigLoader) -> str:
    return check_mode(getattr(args, "mode", None) or config.get("search.mode", "require-strong"))


def _workers(args: argparse.Namespace, config: ConfigLoader) -> int:
    requested = getattr(args, "workers", None)
    if requested is None:
        requested = config.get("search.workers", 0)
    return resolve_workers(requested)


def _indent(config: ConfigLoader) -> int:
    return int(config.get("output.indent", 2))


def cmd_gen(args: argparse.Namespace, config: ConfigLoader) -> int:
    """
    Generate a family member as an edge list or DOT document.

    Args:
        args: spec, format, out
        config: Loaded configuration

    Returns:
        Exit status
    """
    spec = FamilySpec.parse(args.spec)
    digraph = spec.build()

    if args.format == "dot":
        text = to_dot(digraph, name=spec.to_string())
    else:
        text = f"# spec {spec.to_string()}\n" + serialize_digraph(digraph)

    write_text(text, args.out)
    logger.info("Generated %s (%d vertices, %d arcs)", spec, digraph.n, len(digraph.arcs))
    return EXIT_OK


def cmd_dim(args: argparse.Namespace, config: ConfigLoader) -> int:
    """
    Compute the directed metric dimension of a file or a generated spec.

    Args:
        args: input or spec, mode, collect_all, out
        config: Loaded configuration

    Returns:
        Exit status
    """
    if bool(args.input) == bool(args.spec):
        raise DirDimError("dim needs exactly one of an edge-list file or --spec")

    spec: Optional[FamilySpec] = None
    if args.spec:
        spec = FamilySpec.parse(args.spec)
        digraph = spec.build()
    else:
        digraph = read_digraph(args.input)

    mode = _mode(args, config)
    dm = distance_matrix(digraph)
    result = metric_dimension(
        digraph,
        mode=mode,
        collect_all=args.collect_all,
        prune=bool(config.get("search.twin_pruning", True)),
        dm=dm,
    )

    document: Dict[str, Any] = {}
    if spec is not None:
        document["spec"] = spec.to_string()
    else:
        document["input"] = args.input
    document.update(basis_document(digraph, result, dm))

    write_document(document, args.out, indent=_indent(config))
    logger.info("dim = %d, basis %s", result.dimension, list(result.basis))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: ConfigLoader) -> int:
    """
    Build one verification table.

    Args:
        args: theorem, ranges, samples, seed, csv, out, workers, progress
        config: Loaded configuration

    Returns:
        EXIT_OK if every row matches or is flagged, EXIT_MISMATCH otherwise
    """
    theorem = args.theorem.upper()
    options = VerifyOptions(
        n=args.n,
        m=args.m,
        x=args.x,
        t=args.t,
        lengths=args.len,
        samples=args.samples if args.samples is not None else int(
            config.get("verification.t1_samples", 500)
        ),
        seed=args.seed if args.seed is not None else int(config.get("verification.t1_seed", 0)),
        max_subsets=int(config.get("verification.max_subsets", 0)),
        workers=_workers(args, config),
        show_progress=args.progress,
        defaults=config.get("verification.defaults", {}) or {},
    )

    rows = verify(theorem, options)
    passed = table_passes(rows)

    document = {
        "theorem": theorem,
        "passed": passed,
        "rows": [row.to_dict() for row in rows],
    }
    write_document(document, args.out, indent=_indent(config))
    if args.csv:
        write_rows_csv(rows, args.csv)

    for row in rows:
        if not row.ok:
            logger.error("%s %s: formula=%s brute=%d certified=%s table_ok=%s",
                         theorem, row.spec, row.formula, row.brute_force,
                         row.certified, row.table_ok)
    return EXIT_OK if passed else EXIT_MISMATCH


def cmd_ord(args: argparse.Namespace, config: ConfigLoader) -> int:
    """
    Exhaustive ORD scan of an undirected graph.

    Args:
        args: graph, mode, budget, workers, progress, log_csv, out
        config: Loaded configuration

    Returns:
        Exit status
    """
    graph = parse_graph_spec(args.graph)
    budget = args.budget if args.budget is not None else int(
        config.get("orientation_search.edge_budget", 24)
    )

    report = compute_ord(
        graph,
        mode=_mode(args, config),
        budget=budget,
        workers=_workers(args, config),
        chunk_size=int(config.get("orientation_search.chunk_size", 256)),
        show_progress=args.progress or bool(config.get("orientation_search.show_progress", False)),
        keep_log=bool(args.log_csv),
        prune=bool(config.get("search.twin_pruning", True)),
    )

    write_document(report.to_dict(), args.out, indent=_indent(config))
    if args.log_csv:
        write_ord_log_csv(report, args.log_csv)
    return EXIT_OK
