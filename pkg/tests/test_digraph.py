"""
Unit tests for digraph construction, strong connectivity and distances.
"""

import numpy as np
import pytest

from core.digraph import (
    UNREACHABLE,
    DistanceMatrix,
    build_digraph,
    distance_matrix,
    is_strongly_connected,
)
from core.exceptions import DigraphError
from core.families import oriented_wheel_c3simple


class TestBuildDigraph:
    """Tests for build_digraph."""

    def test_directed_triangle(self, triangle):
        """Test the smallest strong oriented cycle."""
        assert triangle.n == 3
        assert triangle.arcs == ((0, 1), (1, 2), (2, 0))

    def test_arcs_sorted(self):
        """Test lexicographic arc normalization."""
        d = build_digraph(4, [(3, 0), (1, 2), (0, 1)])
        assert d.arcs == ((0, 1), (1, 2), (3, 0))

    def test_both_orientations_rejected(self):
        """Test the oriented-graph constraint."""
        with pytest.raises(DigraphError, match="both orientations of an edge"):
            build_digraph(3, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self):
        """Test self loop rejected."""
        with pytest.raises(DigraphError, match="self-loop"):
            build_digraph(2, [(1, 1)])

    def test_duplicate_rejected(self):
        """Test duplicate rejected."""
        with pytest.raises(DigraphError, match="duplicate arc"):
            build_digraph(2, [(0, 1), (0, 1)])

    def test_out_of_range_rejected(self):
        """Test out of range rejected."""
        with pytest.raises(DigraphError, match="outside"):
            build_digraph(2, [(0, 2)])

    def test_empty_vertex_set_rejected(self):
        """Test empty vertex set rejected."""
        with pytest.raises(DigraphError):
            build_digraph(0, [])

    def test_wheel_arc_set(self, w4a_arcs):
        """Test the 8-arc C3-simple W_4."""
        d = build_digraph(5, sorted(w4a_arcs))
        assert set(d.arcs) == w4a_arcs
        assert len(d.arcs) == 8

    def test_degrees(self, w4a_arcs):
        """Test od(v) and id(v) on W_4 variant A."""
        d = build_digraph(5, sorted(w4a_arcs))
        assert d.out_degree(0) == 2
        assert d.in_degree(0) == 2
        assert d.out_degree(2) == 1
        assert d.in_degree(2) == 2
        assert d.successors(1) == (2, 4)
        assert d.predecessors(0) == (2, 4)

    def test_equality_ignores_labels(self, triangle):
        """Test equality ignores labels."""
        labeled = triangle.with_labels(["a", "b", "c"])
        assert labeled == triangle
        assert hash(labeled) == hash(triangle)
        assert labeled.label(2) == "c"
        assert triangle.label(2) == "2"


class TestTransforms:
    """Tests for reversal and relabeling."""

    def test_reversed(self, triangle):
        """Test reversed."""
        assert set(triangle.reversed().arcs) == {(1, 0), (2, 1), (0, 2)}

    def test_relabeled(self, triangle):
        """Test relabeled."""
        moved = triangle.with_labels(["a", "b", "c"]).relabeled([1, 2, 0])
        assert set(moved.arcs) == {(1, 2), (2, 0), (0, 1)}
        assert moved.labels == ("c", "a", "b")

    def test_relabeled_requires_permutation(self, triangle):
        """Test relabeled requires permutation."""
        with pytest.raises(DigraphError, match="not a permutation"):
            triangle.relabeled([0, 0, 1])


class TestStrongConnectivity:
    """Tests for is_strongly_connected."""

    def test_triangle(self, triangle):
        """Test triangle."""
        assert is_strongly_connected(triangle)

    def test_single_arc(self):
        """Test single arc."""
        assert not is_strongly_connected(build_digraph(2, [(0, 1)]))

    def test_single_vertex(self):
        """Test single vertex."""
        assert is_strongly_connected(build_digraph(1, []))

    def test_c3simple_wheel(self):
        """Test c3simple wheel."""
        assert is_strongly_connected(oriented_wheel_c3simple(4, "A"))


class TestDistanceMatrix:
    """Tests for distance_matrix."""

    def test_triangle_distances(self, triangle):
        """Test triangle distances."""
        dm = distance_matrix(triangle)
        assert dm.d(0, 1) == 1
        assert dm.d(1, 0) == 2
        assert all(dm.d(u, u) == 0 for u in range(3))

    def test_wheel_distances(self):
        """Test W_4 variant A distances from the representation table."""
        dm = distance_matrix(oriented_wheel_c3simple(4, "A"))
        assert dm.d(3, 1) == 3
        assert dm.d(3, 2) == 1
        assert dm.d(4, 1) == 2
        assert dm.d(4, 2) == 3
        assert dm.d(0, 1) == 1
        assert dm.d(0, 2) == 2

    def test_unreachable_sentinel(self, path3):
        """Test unreachable sentinel."""
        dm = distance_matrix(path3)
        assert dm.d(2, 0) == UNREACHABLE
        assert not dm.is_finite()
        assert dm.unreachable_pairs() == [(1, 0), (2, 0), (2, 1)]

    def test_reversal_transposes(self, w4a_arcs):
        """Test reversal transposes."""
        d = build_digraph(5, sorted(w4a_arcs))
        assert distance_matrix(d.reversed()) == distance_matrix(d).transpose()

    def test_values_read_only(self, triangle):
        """Test values read only."""
        dm = distance_matrix(triangle)
        with pytest.raises(ValueError):
            dm.values[0, 1] = 5

    def test_square_required(self):
        """Test square required."""
        with pytest.raises(DigraphError):
            DistanceMatrix(np.zeros((2, 3), dtype=int))
