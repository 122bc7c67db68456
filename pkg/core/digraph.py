"""
Oriented graph representation, strong connectivity and all-pairs directed distances.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .exceptions import DigraphError

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]

# Strictly greater than any finite distance; printed as "INF".
UNREACHABLE = 2**31 - 1


class Digraph:
    """
    Immutable oriented graph on vertices 0..n-1.

    Arcs are stored sorted lexicographically. Vertex labels (e.g. "c", "v3")
    are carried for output only and do not take part in equality.
    """

    __slots__ = ("_n", "_arcs", "_arc_set", "_succ", "_pred", "_labels")

    def __init__(self, n: int, arcs: Iterable[Arc], labels: Optional[Sequence[str]] = None):
        """
        Initialize a digraph from already validated arcs.

        Use build_digraph() for untrusted input.

        Args:
            n: Vertex count
            arcs: Directed pairs (u, v)
            labels: Optional vertex names, one per vertex
        """
        self._n = n
        self._arcs: Tuple[Arc, ...] = tuple(sorted((int(u), int(v)) for u, v in arcs))
        self._arc_set = frozenset(self._arcs)

        succ: List[List[int]] = [[] for _ in range(n)]
        pred: List[List[int]] = [[] for _ in range(n)]
        for u, v in self._arcs:
            succ[u].append(v)
            pred[v].append(u)
        self._succ = tuple(tuple(s) for s in succ)
        self._pred = tuple(tuple(sorted(p)) for p in pred)
        self._labels = tuple(labels) if labels is not None else None

    @property
    def n(self) -> int:
        return self._n

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        return self._arcs

    @property
    def labels(self) -> Optional[Tuple[str, ...]]:
        return self._labels

    def label(self, v: int) -> str:
        """Name of vertex v, falling back to its integer id."""
        if self._labels is None:
            return str(v)
        return self._labels[v]

    def successors(self, v: int) -> Tuple[int, ...]:
        return self._succ[v]

    def predecessors(self, v: int) -> Tuple[int, ...]:
        return self._pred[v]

    def out_degree(self, v: int) -> int:
        """od(v)"""
        return len(self._succ[v])

    def in_degree(self, v: int) -> int:
        """id(v)"""
        return len(self._pred[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_set

    def has_edge(self, u: int, v: int) -> bool:
        """True if u and v are adjacent in either direction."""
        return (u, v) in self._arc_set or (v, u) in self._arc_set

    def reversed(self) -> "Digraph":
        """Digraph with every arc reversed."""
        return Digraph(self._n, ((v, u) for u, v in self._arcs), self._labels)

    def relabeled(self, permutation: Sequence[int]) -> "Digraph":
        """
        Apply a vertex permutation.

        Args:
            permutation: permutation[v] is the new id of vertex v

        Returns:
            Relabeled digraph (labels follow their vertices)
        """
        if sorted(permutation) != list(range(self._n)):
            raise DigraphError(f"not a permutation of 0..{self._n - 1}: {list(permutation)}")
        labels = None
        if self._labels is not None:
            moved = [""] * self._n
            for v, name in enumerate(self._labels):
                moved[permutation[v]] = name
            labels = moved
        return Digraph(
            self._n,
            ((permutation[u], permutation[v]) for u, v in self._arcs),
            labels,
        )

    def with_labels(self, labels: Optional[Sequence[str]]) -> "Digraph":
        if labels is not None and len(labels) != self._n:
            raise DigraphError(f"expected {self._n} labels, got {len(labels)}")
        return Digraph(self._n, self._arcs, labels)

    def adjacency(self) -> csr_matrix:
        """Sparse 0/1 adjacency matrix for scipy.sparse.csgraph."""
        rows = np.fromiter((u for u, _ in self._arcs), dtype=np.int32, count=len(self._arcs))
        cols = np.fromiter((v for _, v in self._arcs), dtype=np.int32, count=len(self._arcs))
        data = np.ones(len(self._arcs), dtype=np.int8)
        return csr_matrix((data, (rows, cols)), shape=(self._n, self._n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._arcs == other._arcs

    def __hash__(self) -> int:
        return hash((self._n, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, arcs={list(self._arcs)})"


class DistanceMatrix:
    """
    All-pairs directed distances d(u, v) with the UNREACHABLE sentinel.
    """

    __slots__ = ("_values",)

    def __init__(self, values: np.ndarray):
        """
        Args:
            values: n x n integer array; the array is frozen in place
        """
        values = np.asarray(values, dtype=np.int64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise DigraphError(f"distance matrix must be square, got shape {values.shape}")
        values.flags.writeable = False
        self._values = values

    @property
    def n(self) -> int:
        return self._values.shape[0]

    @property
    def values(self) -> np.ndarray:
        return self._values

    def d(self, u: int, v: int) -> int:
        return int(self._values[u, v])

    def is_finite(self) -> bool:
        return not bool((self._values == UNREACHABLE).any())

    def unreachable_pairs(self) -> List[Arc]:
        """Ordered pairs (u, v) with no directed u-v path, row-major."""
        us, vs = np.nonzero(self._values == UNREACHABLE)
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def transpose(self) -> "DistanceMatrix":
        return DistanceMatrix(self._values.T.copy())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self._values, other._values)

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def build_digraph(
    n: int,
    arcs: Iterable[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
) -> Digraph:
    """
    Validate arcs and build an oriented graph.

    Args:
        n: Vertex count (vertices are 0..n-1)
        arcs: Directed pairs (u, v)
        labels: Optional vertex names

    Returns:
        Digraph with lexicographically normalized arc order

    Raises:
        DigraphError: on self-loop, duplicate arc, both orientations of an edge,
            or an endpoint outside [0, n)
    """
    if n < 1:
        raise DigraphError(f"vertex count must be at least 1, got {n}")

    seen: Dict[Arc, None] = {}
    for arc in arcs:
        if len(arc) != 2:
            raise DigraphError(f"arc must be a pair, got {tuple(arc)}")
        u, v = int(arc[0]), int(arc[1])
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"arc ({u},{v}) has an endpoint outside [0, {n})")
        if u == v:
            raise DigraphError(f"self-loop at vertex {u}")
        if (u, v) in seen:
            raise DigraphError(f"duplicate arc ({u},{v})")
        if (v, u) in seen:
            raise DigraphError(f"both orientations of an edge: ({v},{u}) and ({u},{v})")
        seen[(u, v)] = None

    if labels is not None and len(labels) != n:
        raise DigraphError(f"expected {n} labels, got {len(labels)}")

    return Digraph(n, seen.keys(), labels)


def is_strongly_connected(digraph: Digraph) -> bool:
    """
    Check that every ordered vertex pair is joined by a directed path.

    Args:
        digraph: Oriented graph

    Returns:
        True if strongly connected (a single vertex is)
    """
    n_components, _ = connected_components(
        digraph.adjacency(), directed=True, connection="strong"
    )
    return n_components == 1


def distance_matrix(digraph: Digraph) -> DistanceMatrix:
    """
    Breadth-first directed distances from every source.

    Args:
        digraph: Oriented graph

    Returns:
        DistanceMatrix; unreachable pairs hold UNREACHABLE
    """
    lengths = shortest_path(
        digraph.adjacency(), method="D", directed=True, unweighted=True
    )
    unreachable = np.isinf(lengths)
    values = np.where(unreachable, 0, lengths).astype(np.int64)
    values[unreachable] = UNREACHABLE
    return DistanceMatrix(values)
