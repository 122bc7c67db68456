"""
Representations, resolving sets and exact directed metric dimension.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .digraph import Digraph, DistanceMatrix, distance_matrix
from .exceptions import DigraphError, DimensionUndefinedError

logger = logging.getLogger(__name__)

REQUIRE_STRONG = "require-strong"
ALLOW_SENTINEL = "allow-sentinel"
MODES = (REQUIRE_STRONG, ALLOW_SENTINEL)


@dataclass(frozen=True)
class Representation:
    """r(v|B): distances from v to each vertex of the ordered set B."""

    vertex: int
    base: Tuple[int, ...]
    vector: Tuple[int, ...]


@dataclass(frozen=True)
class BasisResult:
    """
    Outcome of the exact minimum resolving set search.

    Attributes:
        dimension: Size of a minimum resolving set
        basis: Lexicographically least minimum resolving set
        all_min_bases: Every minimum resolving set (only when requested)
        mode: Distance convention used
    """

    dimension: int
    basis: Tuple[int, ...]
    all_min_bases: Optional[Tuple[Tuple[int, ...], ...]] = None
    mode: str = REQUIRE_STRONG


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"Unknown mode '{mode}', expected one of {MODES}")
    return mode


def representation(dm: DistanceMatrix, v: int, base: Sequence[int]) -> Representation:
    """
    Read r(v|B) off row v of the distance matrix.

    Args:
        dm: Distance matrix
        v: Vertex
        base: Ordered vertex list B

    Returns:
        Representation of v with respect to B
    """
    n = dm.n
    for u in (v, *base):
        if not 0 <= u < n:
            raise DigraphError(f"vertex {u} outside [0, {n})")
    base = tuple(int(b) for b in base)
    vector = tuple(dm.d(v, b) for b in base)
    return Representation(vertex=v, base=base, vector=vector)


def is_resolving(dm: DistanceMatrix, base: Sequence[int]) -> bool:
    """
    Check that all vertices have pairwise distinct representations w.r.t. B.

    Args:
        dm: Distance matrix
        base: Vertex set B (any order)

    Returns:
        True if B is a resolving set
    """
    n = dm.n
    cols = sorted(set(int(b) for b in base))
    if not cols:
        return n <= 1
    rows = dm.values[:, cols].tolist()
    return len(set(map(tuple, rows))) == n


def lower_bound_mandatory_pairs(dm: DistanceMatrix) -> List[Tuple[int, int]]:
    """
    Find distance twins: pairs {x, y} whose rows agree outside columns x and y.

    Every resolving set contains x or y, so each pair is a mandatory hit.

    Args:
        dm: Distance matrix

    Returns:
        Twin pairs (x, y) with x < y, lexicographic
    """
    values = dm.values
    n = dm.n
    pairs = []
    for x in range(n):
        for y in range(x + 1, n):
            keep = [u for u in range(n) if u != x and u != y]
            if (values[x, keep] == values[y, keep]).all():
                pairs.append((x, y))
    return pairs


def metric_dimension(
    digraph: Digraph,
    mode: str = REQUIRE_STRONG,
    collect_all: bool = False,
    prune: bool = True,
    dm: Optional[DistanceMatrix] = None,
) -> BasisResult:
    """
    Exact directed metric dimension by cardinality-ascending subset search.

    Subsets of each size are tried in lexicographic order, so the first hit is
    the lexicographically least basis. With prune=True, subsets that miss a
    twin pair are skipped without a resolving check.

    Args:
        digraph: Oriented graph
        mode: REQUIRE_STRONG or ALLOW_SENTINEL
        collect_all: Also return every minimum resolving set
        prune: Use twin-pair pruning (False gives the plain enumeration oracle)
        dm: Precomputed distance matrix of digraph

    Returns:
        BasisResult

    Raises:
        DimensionUndefinedError: require-strong mode on a non-strong digraph
    """
    check_mode(mode)
    if dm is None:
        dm = distance_matrix(digraph)

    if mode == REQUIRE_STRONG:
        unreachable = dm.unreachable_pairs()
        if unreachable:
            raise DimensionUndefinedError(unreachable[0])

    n = digraph.n
    twin_masks = []
    if prune:
        twin_masks = [(1 << x) | (1 << y) for x, y in lower_bound_mandatory_pairs(dm)]

    checked = 0
    for k in range(n + 1):
        found: List[Tuple[int, ...]] = []
        for subset in combinations(range(n), k):
            if twin_masks:
                mask = 0
                for b in subset:
                    mask |= 1 << b
                if any(not (mask & pair) for pair in twin_masks):
                    continue
            checked += 1
            if is_resolving(dm, subset):
                found.append(subset)
                if not collect_all:
                    break
        if found:
            logger.debug(
                "n=%d: dimension %d after %d resolving checks (prune=%s)",
                n, k, checked, prune,
            )
            return BasisResult(
                dimension=k,
                basis=found[0],
                all_min_bases=tuple(found) if collect_all else None,
                mode=mode,
            )

    # B = V always resolves, so the loop returns before this point.
    raise AssertionError("vertex set failed to resolve")


def certify_basis(dm: DistanceMatrix, result: BasisResult) -> bool:
    """
    Re-check a solver result without pruning.

    Args:
        dm: Distance matrix the result was computed from
        result: Solver output

    Returns:
        True if the basis resolves and no smaller subset does
    """
    if len(result.basis) != result.dimension or not is_resolving(dm, result.basis):
        return False
    if result.dimension == 0:
        return True
    return not any(
        is_resolving(dm, subset)
        for subset in combinations(range(dm.n), result.dimension - 1)
    )


def dim_one_witness(digraph: Digraph) -> Optional[Tuple[int, ...]]:
    """
    Search for a path certifying dim(D) = 1 by the Hamiltonian path criterion.

    The path v_{n-1}, ..., v_1, v must be Hamiltonian, end in a vertex v with
    in-degree 1, and D - E(P) must contain no arc (v_j, v_i) with 1 <= i < j <= n-1.

    Args:
        digraph: Oriented graph

    Returns:
        The path as (v_{n-1}, ..., v_1, v), or None if no such path exists
    """
    n = digraph.n
    if n < 2:
        return None

    def extend(path: List[int], on_path: List[bool]) -> bool:
        if len(path) == n:
            return True
        j = len(path)
        for u in digraph.predecessors(path[-1]):
            if on_path[u]:
                continue
            # no arc from the new v_j back to v_0 .. v_{j-2}
            if any(digraph.has_arc(u, path[i]) for i in range(j - 1)):
                continue
            path.append(u)
            on_path[u] = True
            if extend(path, on_path):
                return True
            path.pop()
            on_path[u] = False
        return False

    for v in range(n):
        if digraph.in_degree(v) != 1:
            continue
        path = [v]
        on_path = [False] * n
        on_path[v] = True
        if extend(path, on_path):
            return tuple(reversed(path))
    return None


def is_dim_one_by_characterization(digraph: Digraph) -> bool:
    """True iff the Hamiltonian path criterion for dim(D) = 1 holds."""
    return dim_one_witness(digraph) is not None
