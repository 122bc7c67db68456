"""
Property-based tests over small random oriented graphs.

networkx serves as an independent reference for distances and strong
connectivity.
"""

import networkx as nx
from hypothesis import assume, given
from hypothesis import strategies as st

from core.digraph import UNREACHABLE, distance_matrix, is_strongly_connected
from core.families import _rim, oriented_wheel_c3simple
from core.resolver import (
    ALLOW_SENTINEL,
    certify_basis,
    is_dim_one_by_characterization,
    is_resolving,
    lower_bound_mandatory_pairs,
    metric_dimension,
)
from tests.strategies import oriented_graphs, strong_oriented_graphs


def to_networkx(digraph):
    g = nx.DiGraph()
    g.add_nodes_from(range(digraph.n))
    g.add_edges_from(digraph.arcs)
    return g


class TestDistanceProperties:
    """Distances against networkx."""

    @given(oriented_graphs())
    def test_matches_networkx(self, digraph):
        """Test matches networkx."""
        dm = distance_matrix(digraph)
        lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(digraph)))
        for u in range(digraph.n):
            for v in range(digraph.n):
                assert dm.d(u, v) == lengths[u].get(v, UNREACHABLE)

    @given(oriented_graphs())
    def test_strong_connectivity_matches_networkx(self, digraph):
        """Test strong connectivity matches networkx."""
        assert is_strongly_connected(digraph) == nx.is_strongly_connected(to_networkx(digraph))

    @given(strong_oriented_graphs())
    def test_triangle_inequality(self, digraph):
        """Test triangle inequality."""
        dm = distance_matrix(digraph)
        n = digraph.n
        for u in range(n):
            for v in range(n):
                assert (dm.d(u, v) == 0) == (u == v)
                for w in range(n):
                    assert dm.d(u, w) <= dm.d(u, v) + dm.d(v, w)

    @given(oriented_graphs())
    def test_reversal_transposes(self, digraph):
        """Test reversal transposes."""
        assert distance_matrix(digraph.reversed()) == distance_matrix(digraph).transpose()


class TestResolvingProperties:
    """Resolving sets and the exact solver."""

    @given(oriented_graphs())
    def test_whole_vertex_set_resolves(self, digraph):
        """Test whole vertex set resolves."""
        assert is_resolving(distance_matrix(digraph), range(digraph.n))

    @given(strong_oriented_graphs(), st.data())
    def test_supersets_resolve(self, digraph, data):
        """Test supersets resolve."""
        dm = distance_matrix(digraph)
        base = data.draw(st.sets(st.integers(0, digraph.n - 1), min_size=1))
        assume(is_resolving(dm, sorted(base)))
        extra = data.draw(st.integers(0, digraph.n - 1))
        assert is_resolving(dm, sorted(base | {extra}))

    @given(strong_oriented_graphs())
    def test_pruning_preserves_answer(self, digraph):
        """Test pruning preserves answer."""
        dm = distance_matrix(digraph)
        pruned = metric_dimension(digraph, dm=dm)
        plain = metric_dimension(digraph, dm=dm, prune=False)
        assert pruned.dimension == plain.dimension
        assert pruned.basis == plain.basis
        assert certify_basis(dm, pruned)
        assert 1 <= pruned.dimension <= digraph.n - 1

    @given(strong_oriented_graphs(max_n=6))
    def test_twins_hit_by_every_basis(self, digraph):
        """Test twins hit by every basis."""
        dm = distance_matrix(digraph)
        result = metric_dimension(digraph, dm=dm, collect_all=True, prune=False)
        for u, v in lower_bound_mandatory_pairs(dm):
            for basis in result.all_min_bases:
                assert u in basis or v in basis

    @given(strong_oriented_graphs())
    def test_dim_one_characterization(self, digraph):
        """Test dim one characterization."""
        is_one = metric_dimension(digraph).dimension == 1
        assert is_one == is_dim_one_by_characterization(digraph)

    @given(strong_oriented_graphs(), st.data())
    def test_relabeling_invariance(self, digraph, data):
        """Test relabeling invariance."""
        perm = data.draw(st.permutations(list(range(digraph.n))))
        moved = digraph.relabeled(perm)
        assert metric_dimension(moved).dimension == metric_dimension(digraph).dimension

    @given(oriented_graphs(min_n=2, max_n=6))
    def test_sentinel_mode_always_defined(self, digraph):
        """Test sentinel mode always defined."""
        result = metric_dimension(digraph, mode=ALLOW_SENTINEL)
        assert certify_basis(distance_matrix(digraph), result)


class TestAutomorphisms:
    """Minimum bases are permuted by automorphisms."""

    def test_wheel_rotation(self):
        """Test wheel rotation."""
        n = 6
        digraph = oriented_wheel_c3simple(n, "A")
        rotation = [0] + [_rim(i + 2, n) for i in range(1, n + 1)]
        assert digraph.relabeled(rotation) == digraph

        bases = set(metric_dimension(digraph, collect_all=True).all_min_bases)
        rotated = {tuple(sorted(rotation[v] for v in basis)) for basis in bases}
        assert rotated == bases
