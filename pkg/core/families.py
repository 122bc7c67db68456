"""
Generators for oriented wheels, fans and amalgamations of directed cycles.

Labeling conventions:
    wheels        vertex 0 = c, vertex i = v_i (1 <= i <= n)
    fans F_{m,n}  vertices 0..m-1 = c_1..c_m, vertex m+i-1 = v_i
    P_x-Amal      vertices 0..x-1 = v_1..v_x, then the tail v_{x+1}^i..v_{n_i}^i
                  of each cycle i in order
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Set, Tuple

from .digraph import Arc, Digraph, build_digraph, distance_matrix, UNREACHABLE
from .exceptions import DigraphError, FamilyParameterError

logger = logging.getLogger(__name__)

WHEEL_VARIANTS = ("A", "B")
FAN_VARIANTS = ("centers-out", "centers-in")
CLOSING_ARCS = ("vn-to-v1", "v1-to-vn")


@dataclass(frozen=True)
class CenterPartition:
    """Vertices split by their distance from the center."""

    V0: FrozenSet[int]
    V1: FrozenSet[int]
    V2: FrozenSet[int]


def _rim(i: int, n: int) -> int:
    """Rim index modulo n with representatives 1..n."""
    return (i - 1) % n + 1


def wheel_labels(n: int) -> List[str]:
    return ["c"] + [f"v{i}" for i in range(1, n + 1)]


def fan_labels(m: int, n: int) -> List[str]:
    centers = ["c"] if m == 1 else [f"c{j}" for j in range(1, m + 1)]
    return centers + [f"v{i}" for i in range(1, n + 1)]


def wheel_triangles(n: int) -> List[Tuple[int, int, int]]:
    """Canonical C3 covering of W_n: triangles {c, v_i, v_(i+1)}."""
    return [(0, i, _rim(i + 1, n)) for i in range(1, n + 1)]


def fan_triangles(m: int, n: int) -> List[Tuple[int, int, int]]:
    """Canonical C3 covering of F_{m,n}: triangles {c_j, v_i, v_(i+1)}."""
    return [(c, m + i - 1, m + i) for c in range(m) for i in range(1, n)]


def oriented_wheel_c3simple(n: int, variant: str = "A") -> Digraph:
    """
    C3-simple orientation of the wheel W_n.

    Variant A sends the center to the odd rim vertices, odd rim vertices to
    both rim neighbours, and even rim vertices back to the center; variant B
    swaps the parities.

    Args:
        n: Rim length, even and at least 4
        variant: "A" or "B"

    Returns:
        Oriented wheel on n + 1 vertices
    """
    if variant not in WHEEL_VARIANTS:
        raise FamilyParameterError(f"Unknown wheel variant '{variant}', expected A or B")
    if n < 4:
        raise FamilyParameterError(f"C3-simple wheel needs n >= 4, got n={n}")
    if n % 2:
        raise FamilyParameterError(
            f"W_{n} admits no C3-simple orientation: one exists if and only if n is even"
        )

    hub_parity = 1 if variant == "A" else 0
    arcs: Set[Arc] = set()
    for i in range(1, n + 1):
        if i % 2 == hub_parity:
            arcs.add((0, i))
            arcs.add((i, _rim(i + 1, n)))
            arcs.add((i, _rim(i - 1, n)))
        else:
            arcs.add((i, 0))
    # already produced by the parity rule for even n; the set keeps it single
    arcs.add((1, n) if variant == "A" else (n, 1))

    return build_digraph(n + 1, sorted(arcs), wheel_labels(n))


def _fan_arcs(m: int, n: int, variant: str) -> List[Arc]:
    out_parity = 1 if variant == "centers-out" else 0
    arcs: List[Arc] = []
    for c in range(m):
        for i in range(1, n + 1):
            v = m + i - 1
            arcs.append((c, v) if i % 2 == out_parity else (v, c))
    for i in range(1, n + 1):
        if i % 2 != out_parity:
            continue
        v = m + i - 1
        if i + 1 <= n:
            arcs.append((v, v + 1))
        if i - 1 >= 1:
            arcs.append((v, v - 1))
    return arcs


def oriented_fan_c3simple(m: int, n: int, variant: str = "centers-out") -> Digraph:
    """
    C3-simple orientation of the fan F_{m,n}.

    With centers-out every center sends arcs to the odd path vertices and
    receives them from the even ones, and odd path vertices point at their path
    neighbours; centers-in swaps the parities. The same orientation is applied
    to every center.

    Args:
        m: Number of centers, at least 1
        n: Path order, at least 2
        variant: "centers-out" or "centers-in"

    Returns:
        Oriented fan on m + n vertices
    """
    if variant not in FAN_VARIANTS:
        raise FamilyParameterError(f"Unknown fan variant '{variant}', expected {FAN_VARIANTS}")
    if m < 1:
        raise FamilyParameterError(f"fan needs m >= 1 centers, got m={m}")
    if n < 2:
        raise FamilyParameterError(f"fan needs a path of order n >= 2, got n={n}")

    return build_digraph(m + n, _fan_arcs(m, n, variant), fan_labels(m, n))


def oriented_wheel_odd(
    n: int,
    fan_variant: str = "centers-out",
    closing_arc: str = "vn-to-v1",
) -> Digraph:
    """
    Odd wheel W_n: a C3-simple fan F_{1,n} closed by one rim arc.

    The closing triangle {c, v_n, v_1} is not strong.

    Args:
        n: Odd rim length, at least 3
        fan_variant: Orientation of the embedded fan
        closing_arc: "vn-to-v1" or "v1-to-vn"

    Returns:
        Oriented wheel on n + 1 vertices
    """
    if closing_arc not in CLOSING_ARCS:
        raise FamilyParameterError(f"Unknown closing arc '{closing_arc}', expected {CLOSING_ARCS}")
    if n < 3 or n % 2 == 0:
        raise FamilyParameterError(f"odd wheel needs odd n >= 3, got n={n}")

    arcs = _fan_arcs(1, n, fan_variant) if fan_variant in FAN_VARIANTS else None
    if arcs is None:
        raise FamilyParameterError(f"Unknown fan variant '{fan_variant}', expected {FAN_VARIANTS}")
    arcs.append((n, 1) if closing_arc == "vn-to-v1" else (1, n))

    return build_digraph(n + 1, arcs, wheel_labels(n))


def wheel_dim2_orientation(n: int) -> Digraph:
    """
    Two-dimensional orientation of W_n for n >= 8.

    F_{1,7} on {c, v_1..v_7} is oriented centers-out, the remaining rim forms
    the directed path v_1 -> v_n -> v_(n-1) -> ... -> v_8 -> v_7, and the center
    sends an arc to each of v_8..v_n.

    Args:
        n: Rim length, at least 8

    Returns:
        Oriented wheel on n + 1 vertices
    """
    if n < 8:
        raise FamilyParameterError(
            f"wheel-dim2 construction needs n >= 8, got n={n}; "
            f"use wheel-c3simple (even n) or wheel-odd (odd n) below 8"
        )

    arcs = _fan_arcs(1, 7, "centers-out")
    arcs.append((1, n))
    arcs.extend((i, i - 1) for i in range(8, n + 1))
    arcs.extend((0, i) for i in range(8, n + 1))

    return build_digraph(n + 1, arcs, wheel_labels(n))


def fan_dim2_orientation(n: int) -> Digraph:
    """
    Two-dimensional orientation of F_{1,n} for n >= 3.

    v_1 has no incoming arc, so the result is not strongly connected; its
    dimension is defined under the allow-sentinel convention.

    Args:
        n: Path order, at least 3

    Returns:
        Oriented fan on n + 1 vertices
    """
    if n < 3:
        raise FamilyParameterError(f"fan-dim2 construction needs n >= 3, got n={n}")

    arcs: List[Arc] = [(1, 2), (3, 2), (1, 0), (2, 0), (0, 3)]
    if n >= 4:
        arcs.extend([(3, 4), (4, 0)])
    for i in range(5, n + 1):
        arcs.append((i, i - 1))
        arcs.append((0, i))

    return build_digraph(n + 1, arcs, fan_labels(1, n))


def path_amal_cycles(x: int, lengths: Sequence[int]) -> Digraph:
    """
    Path amalgamation of t directed cycles along the terminal path v_1..v_x.

    Cycle i is v_1 -> ... -> v_x -> v_(x+1)^i -> ... -> v_(n_i)^i -> v_1.
    x = 1 is the vertex amalgamation and x = 2 the edge amalgamation.

    Args:
        x: Order of the terminal path
        lengths: Cycle lengths n_1..n_t

    Returns:
        Strongly connected oriented graph
    """
    lengths = [int(length) for length in lengths]
    if len(lengths) < 2:
        raise FamilyParameterError(f"amalgamation needs t >= 2 cycles, got {len(lengths)}")
    if min(lengths) < 3:
        raise FamilyParameterError(f"cycle lengths must be at least 3, got {lengths}")
    if not 1 <= x <= min(lengths) - 1:
        raise FamilyParameterError(
            f"terminal path order x must satisfy 1 <= x <= {min(lengths) - 1}, got x={x}"
        )

    labels = [f"v{k}" for k in range(1, x + 1)]
    arcs: List[Arc] = [(k, k + 1) for k in range(x - 1)]
    next_id = x
    for i, length in enumerate(lengths, start=1):
        prev = x - 1
        for k in range(x + 1, length + 1):
            arcs.append((prev, next_id))
            labels.append(f"v{k}^{i}")
            prev = next_id
            next_id += 1
        arcs.append((prev, 0))

    return build_digraph(next_id, arcs, labels)


def check_cn_simple(
    digraph: Digraph,
    cycle_length: int,
    covering: Sequence[Sequence[int]],
) -> bool:
    """
    Check that every listed cycle is oriented as a directed cycle.

    Args:
        digraph: Oriented graph
        cycle_length: Expected number of vertices per cycle
        covering: Cycles as vertex sequences

    Returns:
        True if every listed cycle is strong

    Raises:
        DigraphError: a cycle has the wrong length or a missing edge
    """
    all_strong = True
    for cycle in covering:
        if len(cycle) != cycle_length:
            raise DigraphError(f"cycle {tuple(cycle)} does not have {cycle_length} vertices")
        steps = list(zip(cycle, list(cycle[1:]) + [cycle[0]]))
        for a, b in steps:
            if not digraph.has_edge(a, b):
                raise DigraphError(f"cycle {tuple(cycle)} uses missing edge {{{a},{b}}}")
        forward = all(digraph.has_arc(a, b) for a, b in steps)
        backward = all(digraph.has_arc(b, a) for a, b in steps)
        if not (forward or backward):
            all_strong = False
    return all_strong


def center_partition(digraph: Digraph, centers: Sequence[int]) -> CenterPartition:
    """
    Split the non-center vertices by distance from the first center.

    Args:
        digraph: C3-simple wheel or fan
        centers: Center vertex ids

    Returns:
        CenterPartition(V0, V1, V2)

    Raises:
        FamilyParameterError: a vertex lies at distance 3 or more
    """
    if not centers:
        raise FamilyParameterError("center set must not be empty")
    dm = distance_matrix(digraph)
    center_set = frozenset(int(c) for c in centers)
    first = int(centers[0])

    v1: Set[int] = set()
    v2: Set[int] = set()
    for v in range(digraph.n):
        if v in center_set:
            continue
        dist = dm.d(first, v)
        if dist == 1:
            v1.add(v)
        elif dist == 2:
            v2.add(v)
        else:
            shown = "INF" if dist == UNREACHABLE else dist
            raise FamilyParameterError(
                f"not a C3-simple wheel/fan shape: vertex {digraph.label(v)} "
                f"is at distance {shown} from the center"
            )

    return CenterPartition(V0=center_set, V1=frozenset(v1), V2=frozenset(v2))
