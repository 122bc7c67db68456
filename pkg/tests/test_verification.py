"""
Tests for the verification tables.
"""

import pytest

from core.exceptions import BudgetExceededError, SpecParseError
from core.orientation_search import compute_ord, cycle_graph, wheel_graph
from core.resolver import ALLOW_SENTINEL
from core.verification import (
    INCONSISTENT,
    VerifyOptions,
    check_feasible,
    cross_validate_characterization,
    parse_int_range,
    plan,
    table_passes,
    theorem6_formula,
    theorem7_formula,
    theorem8_formula,
    verify,
)


def options(**kwargs):
    kwargs.setdefault("workers", 1)
    return VerifyOptions(**kwargs)


class TestParseIntRange:
    """Tests for parse_int_range."""

    def test_forms(self):
        """Test ranges, singletons and lists."""
        assert parse_int_range("4..7") == [4, 5, 6, 7]
        assert parse_int_range("5") == [5]
        assert parse_int_range("9,3,5") == [3, 5, 9]
        assert parse_int_range("4..6,12") == [4, 5, 6, 12]

    @pytest.mark.parametrize("text", ["", "7..4", "a..3", "x"])
    def test_bad(self, text):
        """Test malformed ranges."""
        with pytest.raises(SpecParseError):
            parse_int_range(text)


class TestFormulas:
    """Tests for the closed-form statement values."""

    def test_c3simple_wheel(self):
        """Test C3-simple wheel values."""
        assert theorem6_formula(4) == 2
        assert theorem6_formula(6) == 2
        assert theorem6_formula(10) == 4

    def test_odd_wheel(self):
        """Test odd wheel values per variant."""
        assert theorem7_formula(5, "centers-in", "v1-to-vn") == 1
        assert theorem7_formula(9, "centers-out", "v1-to-vn") == 3
        assert theorem7_formula(9, "centers-in", "vn-to-v1") == 3
        assert theorem7_formula(9, "centers-in", "v1-to-vn") == 4

    def test_fan(self):
        """Test fan values including the uncovered cell."""
        assert theorem8_formula(1, 3, "centers-out") == 1
        assert theorem8_formula(3, 2, "centers-out") == 2
        assert theorem8_formula(2, 4, "centers-in") == 2
        assert theorem8_formula(2, 5, "centers-in") == 3
        assert theorem8_formula(2, 8, "centers-out") == 4
        assert theorem8_formula(1, 7, "centers-out") == 2
        assert theorem8_formula(1, 7, "centers-in") == 3
        assert theorem8_formula(1, 5, "centers-out") is None


class TestPlanning:
    """Tests for case planning and the subset budget."""

    def test_c3simple_wheel_skips_odd(self):
        """Test odd rims are not planned."""
        cases = plan("T6", options(n="4..7"))
        assert [c.spec for c in cases] == [
            "wheel-c3simple:n=4,variant=A",
            "wheel-c3simple:n=4,variant=B",
            "wheel-c3simple:n=6,variant=A",
            "wheel-c3simple:n=6,variant=B",
        ]
        assert cases[0].order == 5

    def test_odd_wheel_grid(self):
        """Test four rows per odd rim."""
        assert len(plan("T7", options(n="5..8"))) == 8

    def test_amalgamation_respects_path_order(self):
        """Test rows need x below the shortest cycle."""
        cases = plan("T11", options(x="3", t="2", lengths="3..4"))
        assert [c.params["lengths"] for c in cases] == [[4, 4]]
        assert cases[0].order == 3 + 1 + 1

    def test_default_amalgamation_grid(self):
        """Test size of the default grid."""
        assert len(plan("T11", options())) == 161

    def test_fan_dim2_uses_sentinel_mode(self):
        """Test fan rows run under allow-sentinel."""
        assert all(c.mode == ALLOW_SENTINEL for c in plan("T10", options(n="3..5")))

    def test_defaults_from_config(self):
        """Test per-table defaults."""
        opts = options(defaults={"T6": {"n": "8"}})
        assert {c.params["n"] for c in plan("T6", opts)} == {8}

    def test_unknown_table(self):
        """Test unknown table name."""
        with pytest.raises(SpecParseError):
            plan("T99", options())

    def test_budget(self):
        """Test subset budget refusal."""
        with pytest.raises(BudgetExceededError) as excinfo:
            check_feasible(plan("T6", options(n="4..8")), max_subsets=10)
        assert excinfo.value.budget == 10
        assert excinfo.value.required > 10

    def test_budget_disabled(self):
        """Test zero disables the budget."""
        assert check_feasible(plan("T6", options(n="4")), max_subsets=0) == 2 * 10


class TestC3SimpleWheelTable:
    """C3-simple wheels."""

    def test_small_rims(self):
        """Test rims 4 to 8."""
        rows = verify("T6", options(n="4..8"))
        assert len(rows) == 6
        assert all(row.match and row.certified for row in rows)
        assert table_passes(rows)

    def test_representation_table(self):
        """Test the W_4 representation table."""
        rows = verify("T6", options(n="4"))
        assert all(row.table_ok for row in rows)


class TestOddWheelTable:
    """Odd wheels built from a C3-simple fan."""

    def test_rim_five_is_flagged(self):
        """Test every n = 5 row is flagged."""
        rows = verify("T7", options(n="5"))
        assert len(rows) == 4
        assert all(row.flagged and not row.match for row in rows)
        assert all(INCONSISTENT in row.notes for row in rows)
        assert table_passes(rows)

    def test_rim_seven(self):
        """Test n = 7: only centers-in with v1 -> vn disagrees."""
        rows = verify("T7", options(n="7"))
        assert [r.brute_force for r in rows] == [2, 2, 2, 2]
        flagged = [(r.params["fan_variant"], r.params["closing"]) for r in rows if r.flagged]
        assert flagged == [("centers-in", "v1-to-vn")]
        assert all(r.match for r in rows if not r.flagged)
        assert table_passes(rows)


class TestFanTable:
    """C3-simple fans."""

    def test_small_fans(self):
        """Test m 1..3, n 2..6 with the uncovered cell."""
        rows = verify("T8", options(m="1..3", n="2..6"))
        assert table_passes(rows)
        uncovered = [r for r in rows if r.formula is None]
        assert {(r.params["m"], r.params["n"]) for r in uncovered} == {(1, 5)}
        assert all(r.flagged and r.notes == "not covered by statement" for r in uncovered)

    def test_three_centers_path_two(self):
        """Test F_{3,2}."""
        rows = verify("T8", options(m="3", n="2"))
        assert [r.brute_force for r in rows] == [2, 2]


class TestDim2Tables:
    """Two-dimensional wheel and fan constructions."""

    def test_wheel(self):
        """Test n 8..10 with representation tables."""
        rows = verify("T9", options(n="8..10"))
        assert all(r.brute_force == 2 and r.table_ok for r in rows)
        assert table_passes(rows)

    def test_wheel_small_rims(self):
        """Test n 3..7; W_3 has dimension 1 in every strong orientation."""
        rows = verify("T9", options(n="3..7"))
        assert [r.params["n"] for r in rows] == [3, 4, 5, 6, 7]
        assert rows[0].brute_force == 1
        assert rows[0].flagged and INCONSISTENT in rows[0].notes
        assert all(r.match and not r.flagged for r in rows[1:])
        assert compute_ord(wheel_graph(3)).ord == 1
        assert table_passes(rows)

    def test_fan(self):
        """Test n 3..7 under allow-sentinel."""
        rows = verify("T10", options(n="3..7"))
        assert all(r.brute_force == 2 and r.table_ok for r in rows)
        assert all("allow-sentinel" in r.notes for r in rows)
        assert table_passes(rows)


class TestAmalgamationTable:
    """Path amalgamations of directed cycles."""

    def test_small_grid(self):
        """Test dimension t - 1 and distances on a small grid."""
        rows = verify("T11", options(x="1..2", t="2..3", lengths="3..5"))
        assert rows
        assert all(r.brute_force == len(r.params["lengths"]) - 1 for r in rows)
        assert all(r.table_ok for r in rows)
        assert table_passes(rows)


class TestCountingAndCharacterization:
    """C3-simple orientation counts and the dim-1 criterion."""

    def test_c3_simple_counts(self):
        """Test counts for W_3 to W_6."""
        rows = verify("L5", options(n="3..6"))
        assert [r.brute_force for r in rows] == [0, 2, 0, 2]
        assert table_passes(rows)

    def test_dim_one_criterion(self):
        """Test named graphs and random samples."""
        rows = verify("T1", options(graphs=("cycle:3", "complete:4"), samples=20, seed=7))
        assert len(rows) == 3
        assert all(r.match for r in rows)
        assert rows[-1].formula == 20

    def test_cross_validation_on_cycles(self):
        """Test directed cycles agree."""
        digraphs = [compute_ord(cycle_graph(n)).witness(1) for n in range(3, 7)]
        assert cross_validate_characterization(digraphs) == []

    def test_row_document(self):
        """Test row serialization."""
        row = verify("T6", options(n="4"))[0]
        doc = row.to_dict()
        assert doc["theorem"] == "T6"
        assert doc["formula"] == 2
        assert doc["basis"] == list(row.basis)


@pytest.mark.slow
class TestFullTables:
    """Default ranges from the repository configuration."""

    @pytest.mark.parametrize("theorem", ["T6", "T8", "T9", "T10", "T11", "L5"])
    def test_table_passes(self, theorem):
        """Test the default range."""
        assert table_passes(verify(theorem, options()))

    def test_odd_wheels(self):
        """Test odd rims 3 to 9."""
        rows = verify("T7", options(n="3..9"))
        assert len(rows) == 16
        assert table_passes(rows)

    def test_dim_one_criterion(self):
        """Test 500 random samples and every strong orientation of C_4 and C_5."""
        rows = verify("T1", options(graphs=("cycle:4", "cycle:5"), samples=500))
        assert [r.formula for r in rows] == [2, 2, 500]
        assert all(r.match for r in rows)
        assert table_passes(rows)
