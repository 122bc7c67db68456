"""
Exhaustive orientation enumeration, upper orientable dimension and dimension spectra.

Orientation number `mask` directs edge k = (a, b), a < b, as a -> b when bit k
of mask is 0 and as b -> a when it is 1.
"""

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from utils.workers import ordered_map

from .digraph import Digraph, distance_matrix
from .exceptions import BudgetExceededError, DigraphError
from .families import check_cn_simple
from .resolver import REQUIRE_STRONG, check_mode, metric_dimension

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

DEFAULT_EDGE_BUDGET = 24
DEFAULT_CHUNK_SIZE = 256


@dataclass(frozen=True)
class UndirectedGraph:
    """
    Simple undirected graph with a fixed edge order.

    Attributes:
        n: Vertex count
        edges: Edges (a, b) with a < b, in enumeration order
        name: Display name, e.g. "wheel:4"
    """

    n: int
    edges: Tuple[Edge, ...]
    name: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise DigraphError(f"vertex count must be at least 1, got {self.n}")
        normalized = []
        seen = set()
        for a, b in self.edges:
            a, b = int(a), int(b)
            if a == b:
                raise DigraphError(f"loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise DigraphError(f"edge {{{a},{b}}} has an endpoint outside [0, {self.n})")
            edge = (min(a, b), max(a, b))
            if edge in seen:
                raise DigraphError(f"duplicate edge {{{edge[0]},{edge[1]}}}")
            seen.add(edge)
            normalized.append(edge)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def orientation(self, mask: int) -> Digraph:
        """Orientation number mask (see module docstring)."""
        arcs = [(b, a) if (mask >> k) & 1 else (a, b) for k, (a, b) in enumerate(self.edges)]
        return Digraph(self.n, arcs)

    def to_dict(self) -> Dict[str, object]:
        return {"name": self.name, "n": self.n, "edges": [list(e) for e in self.edges]}


def cycle_graph(n: int) -> UndirectedGraph:
    if n < 3:
        raise DigraphError(f"cycle needs n >= 3, got n={n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return UndirectedGraph(n, tuple(edges), f"cycle:{n}")


def wheel_graph(n: int) -> UndirectedGraph:
    """W_n = K_1 + C_n: spokes (c, v_i) first, then rim edges."""
    if n < 3:
        raise DigraphError(f"wheel needs n >= 3, got n={n}")
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return UndirectedGraph(n + 1, tuple(spokes + rim), f"wheel:{n}")


def fan_graph(m: int, n: int) -> UndirectedGraph:
    """F_{m,n}: centers 0..m-1 joined to every vertex of the path m..m+n-1."""
    if m < 1 or n < 2:
        raise DigraphError(f"fan needs m >= 1 and n >= 2, got m={m}, n={n}")
    spokes = [(c, m + i) for c in range(m) for i in range(n)]
    path = [(m + i, m + i + 1) for i in range(n - 1)]
    return UndirectedGraph(m + n, tuple(spokes + path), f"fan:{m}:{n}")


def complete_graph(n: int) -> UndirectedGraph:
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return UndirectedGraph(n, tuple(edges), f"complete:{n}")


def underlying_graph(digraph: Digraph, name: str = "") -> UndirectedGraph:
    """Forget arc directions (edge order follows the sorted arc list)."""
    return UndirectedGraph(digraph.n, digraph.arcs, name)


def mask_of(graph: UndirectedGraph, digraph: Digraph) -> int:
    """Orientation number of digraph as an orientation of graph."""
    mask = 0
    for k, (a, b) in enumerate(graph.edges):
        if digraph.has_arc(b, a):
            mask |= 1 << k
        elif not digraph.has_arc(a, b):
            raise DigraphError(f"edge {{{a},{b}}} is missing from the digraph")
    return mask


def check_edge_budget(graph: UndirectedGraph, budget: int) -> None:
    if graph.m > budget:
        raise BudgetExceededError(
            f"{graph.name or 'graph'} has {graph.m} edges, so 2^{graph.m} orientations; "
            f"edge budget is {budget} (raise it to {graph.m} to proceed)",
            required=graph.m,
            budget=budget,
            estimate=2 ** graph.m,
        )


def enumerate_orientations(
    graph: UndirectedGraph,
    budget: int = DEFAULT_EDGE_BUDGET,
) -> Iterator[Tuple[int, Digraph]]:
    """
    Yield every orientation in ascending mask order.

    Args:
        graph: Undirected graph
        budget: Maximum edge count

    Yields:
        (mask, orientation)

    Raises:
        BudgetExceededError: graph has more edges than the budget
    """
    check_edge_budget(graph, budget)
    for mask in range(2 ** graph.m):
        yield mask, graph.orientation(mask)


@dataclass(frozen=True)
class OrientationLogRow:
    mask: int
    strong: bool
    dimension: Optional[int]


@dataclass
class _Partial:
    total: int = 0
    strong: int = 0
    per_dimension: Dict[int, int] = field(default_factory=dict)
    witnesses: Dict[int, int] = field(default_factory=dict)
    log: List[OrientationLogRow] = field(default_factory=list)


def _scan_range(
    bounds: Tuple[int, int],
    graph: UndirectedGraph,
    mode: str,
    keep_log: bool,
    prune: bool = True,
) -> _Partial:
    """Scan masks [start, stop); witnesses are the least mask per dimension."""
    start, stop = bounds
    part = _Partial()
    for mask in range(start, stop):
        digraph = graph.orientation(mask)
        dm = distance_matrix(digraph)
        strong = dm.is_finite()
        part.total += 1
        part.strong += strong

        dimension = None
        if strong or mode != REQUIRE_STRONG:
            dimension = metric_dimension(digraph, mode=mode, prune=prune, dm=dm).dimension
            part.per_dimension[dimension] = part.per_dimension.get(dimension, 0) + 1
            part.witnesses.setdefault(dimension, mask)
        if keep_log:
            part.log.append(OrientationLogRow(mask, bool(strong), dimension))
    return part


def _merge(partials: Sequence[_Partial]) -> _Partial:
    merged = _Partial()
    for part in partials:
        merged.total += part.total
        merged.strong += part.strong
        for k, count in part.per_dimension.items():
            merged.per_dimension[k] = merged.per_dimension.get(k, 0) + count
        for k, mask in part.witnesses.items():
            if k not in merged.witnesses or mask < merged.witnesses[k]:
                merged.witnesses[k] = mask
        merged.log.extend(part.log)
    return merged


@dataclass(frozen=True)
class OrdReport:
    """
    Result of an exhaustive orientation scan.

    Attributes:
        graph: Scanned graph
        mode: Distance convention
        ord: Maximum dimension over qualifying orientations (None if there are none)
        spectrum: Dimensions achieved, ascending
        total: Number of orientations
        strong_count: Strongly connected orientations
        per_dimension: Orientation count per dimension
        witnesses: Least mask achieving each dimension
        log: Per-orientation rows when requested
    """

    graph: UndirectedGraph
    mode: str
    ord: Optional[int]
    spectrum: Tuple[int, ...]
    total: int
    strong_count: int
    per_dimension: Dict[int, int]
    witnesses: Dict[int, int]
    log: Tuple[OrientationLogRow, ...] = ()

    def witness(self, dimension: int) -> Digraph:
        return self.graph.orientation(self.witnesses[dimension])

    def to_dict(self) -> Dict[str, object]:
        """
        Convert the report to a JSON-ready dictionary.

        Returns:
            Dictionary representation (log rows excluded)
        """
        return {
            "graph": self.graph.to_dict(),
            "mode": self.mode,
            "ord": self.ord,
            "spectrum": list(self.spectrum),
            "counts": {
                "total": self.total,
                "strongly_connected": self.strong_count,
                "per_dimension": {str(k): v for k, v in sorted(self.per_dimension.items())},
            },
            "witnesses": {
                str(k): {"mask": mask, "arcs": [list(a) for a in self.witness(k).arcs]}
                for k, mask in sorted(self.witnesses.items())
            },
        }


def _chunks(count: int, chunk_size: int) -> List[Tuple[int, int]]:
    chunk_size = max(1, chunk_size)
    return [(start, min(start + chunk_size, count)) for start in range(0, count, chunk_size)]


def compute_ord(
    graph: UndirectedGraph,
    mode: str = REQUIRE_STRONG,
    budget: int = DEFAULT_EDGE_BUDGET,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    show_progress: bool = False,
    keep_log: bool = False,
    prune: bool = True,
) -> OrdReport:
    """
    Upper orientable dimension ORD(G) by exhaustive scan.

    The mask range is cut into contiguous chunks, scanned in parallel and
    merged; the report does not depend on workers or chunk_size.

    Args:
        graph: Undirected graph
        mode: REQUIRE_STRONG counts only strongly connected orientations
        budget: Maximum edge count
        workers: Process count
        chunk_size: Orientations per work item
        show_progress: tqdm bar over chunks
        keep_log: Keep one OrientationLogRow per orientation
        prune: Twin-pair pruning in the per-orientation solver

    Returns:
        OrdReport

    Raises:
        BudgetExceededError: graph has more edges than the budget
    """
    check_mode(mode)
    check_edge_budget(graph, budget)

    count = 2 ** graph.m
    scan = partial(_scan_range, graph=graph, mode=mode, keep_log=keep_log, prune=prune)
    partials = ordered_map(
        scan,
        _chunks(count, chunk_size),
        workers=workers,
        show_progress=show_progress,
        desc=f"ord {graph.name}".strip(),
    )
    merged = _merge(partials)

    spectrum = tuple(sorted(merged.per_dimension))
    report = OrdReport(
        graph=graph,
        mode=mode,
        ord=max(spectrum) if spectrum else None,
        spectrum=spectrum,
        total=merged.total,
        strong_count=merged.strong,
        per_dimension=dict(sorted(merged.per_dimension.items())),
        witnesses=dict(sorted(merged.witnesses.items())),
        log=tuple(merged.log),
    )
    logger.info(
        "%s: ord=%s spectrum=%s over %d orientations (%d strongly connected)",
        graph.name or "graph", report.ord, list(spectrum), report.total, report.strong_count,
    )
    return report


def dim_spectrum(
    graph: UndirectedGraph,
    mode: str = REQUIRE_STRONG,
    budget: int = DEFAULT_EDGE_BUDGET,
    workers: int = 1,
) -> FrozenSet[int]:
    """Dimensions achieved by some qualifying orientation of graph."""
    return frozenset(compute_ord(graph, mode=mode, budget=budget, workers=workers).spectrum)


def count_cn_simple_orientations(
    graph: UndirectedGraph,
    cycle_length: int,
    covering: Sequence[Sequence[int]],
    budget: int = DEFAULT_EDGE_BUDGET,
) -> List[int]:
    """
    Masks of all orientations in which every covering cycle is directed.

    Args:
        graph: Undirected graph
        cycle_length: Vertices per covering cycle
        covering: Cycles as vertex sequences

    Returns:
        Qualifying masks, ascending
    """
    return [
        mask
        for mask, digraph in enumerate_orientations(graph, budget)
        if check_cn_simple(digraph, cycle_length, covering)
    ]
