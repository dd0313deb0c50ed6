"""Unit tests for closed-form topological complexity values."""
import pytest

from core.errors import DomainError
from core.graphs import library
from core.graphs.graph import GraphWithSinks
from core.tc import (
    OraclePrediction,
    Special,
    oracle_farber_conjecture,
    oracle_tc_articulation_bounds,
    oracle_tc_banana,
    oracle_tc_fully_articulated,
    oracle_tc_graph,
    oracle_tc_tree,
    predict,
)


class TestFormulas:
    """Test the individual closed forms."""

    @pytest.mark.parametrize("b1, expected", [(0, 0), (1, 1), (2, 2), (7, 2)])
    def test_graph(self, b1, expected):
        """Test TC of a graph by its first Betti number."""
        assert oracle_tc_graph(b1) == expected

    def test_graph_negative(self):
        """Test that a negative Betti number is refused."""
        with pytest.raises(DomainError):
            oracle_tc_graph(-1)

    @pytest.mark.parametrize("n, v3, expected", [(2, 2, 2), (3, 2, 2), (4, 2, 4), (9, 2, 4), (6, 5, 6)])
    def test_tree(self, n, v3, expected):
        """Test 2 min(n // 2, |V_{>=3}|)."""
        assert oracle_tc_tree(n, v3) == expected

    def test_tree_exclusions(self):
        """Test that the interval and Y are outside the tree formula."""
        with pytest.raises(DomainError):
            oracle_tc_tree(2, 0, interval=True)
        with pytest.raises(DomainError):
            oracle_tc_tree(2, 1, y_shaped=True)
        with pytest.raises(DomainError):
            oracle_tc_tree(0, 2)

    def test_fully_articulated(self):
        """Test 2 |V_{>=3}| and the Y exception."""
        assert oracle_tc_fully_articulated(4, 2) == 4
        assert oracle_tc_fully_articulated(2, 1, y_shaped=True) == 1
        assert oracle_tc_fully_articulated(3, 1, y_shaped=True) == 2
        with pytest.raises(DomainError):
            oracle_tc_fully_articulated(3, 2)

    @pytest.mark.parametrize("n, k, expected", [
        (1, 1, 0),
        (1, 2, 1),
        (2, 2, 1),
        (3, 2, Special.INFINITE),
        (2, 1, Special.INFINITE),
        (2, 3, 2),
        (3, 3, 2),
        (4, 3, Special.UNKNOWN),
        (2, 5, 2),
        (3, 4, 4),
        (7, 6, 4),
    ])
    def test_banana(self, n, k, expected):
        """Test the banana graph table."""
        assert oracle_tc_banana(n, k) == expected

    def test_articulation_bounds(self):
        """Test the sandwich for graphs with several essential articulations."""
        assert oracle_tc_articulation_bounds(4, 2, 3) == (4, 6)
        with pytest.raises(DomainError):
            oracle_tc_articulation_bounds(3, 2, 3)
        with pytest.raises(DomainError):
            oracle_tc_articulation_bounds(4, 1, 3)

    def test_conjecture(self):
        """Test the conjectured value and its range."""
        assert oracle_farber_conjecture(4, 2) == 4
        with pytest.raises(DomainError):
            oracle_farber_conjecture(3, 2)


class TestPrediction:
    """Test which closed form covers a graph."""

    def test_one_particle(self, banana4):
        """Test that one particle uses the graph formula."""
        prediction = predict(banana4, 1)
        assert prediction.source == "graph"
        assert prediction.lower == prediction.upper == 2

    def test_y(self, y_graph):
        """Test the Y exception at two particles."""
        assert predict(y_graph, 2) == OraclePrediction.exact("y", 1)

    def test_interval(self):
        """Test that two particles on an interval give infinite TC."""
        prediction = predict(library.tree("I", [("a", "b")]), 2)
        assert prediction.special is Special.INFINITE
        assert not prediction.is_exact

    @pytest.mark.parametrize("n, expected", [(2, 2), (3, 2), (4, 4)])
    def test_h_tree(self, h_graph, n, expected):
        """Test the tree formula on H."""
        prediction = predict(h_graph, n)
        assert prediction.source == "tree"
        assert prediction.lower == expected

    def test_banana(self, banana3):
        """Test that banana graphs use their own table."""
        assert predict(banana3, 4).special is Special.UNKNOWN
        assert predict(library.banana(2), 3).special is Special.INFINITE

    def test_fully_articulated(self, bowtie):
        """Test the bowtie, whose only essential vertex is an articulation."""
        prediction = predict(bowtie, 2)
        assert prediction.source == "fully-articulated"
        assert prediction.lower == 2

    def test_sinks_have_no_oracle(self, interval_sinks):
        """Test that graphs with sinks are not covered."""
        assert predict(interval_sinks, 2) is None

    def test_disconnected(self):
        """Test that disconnected graphs are not covered."""
        g = GraphWithSinks(("a", "b", "c", "d"), (False,) * 4, ((0, 1), (2, 3)))
        assert predict(g, 2) is None

    def test_admits(self):
        """Test interval overlap for predictions."""
        prediction = OraclePrediction("articulation-bounds", 4, 6)
        assert prediction.admits(2, 4)
        assert not prediction.admits(0, 2)
        assert OraclePrediction.exact("banana", Special.UNKNOWN).admits(0, 0)

    def test_to_dict(self):
        """Test the plain dictionary form."""
        assert OraclePrediction.exact("banana", Special.INFINITE).to_dict() == {
            "source": "banana", "lower": None, "upper": None,
            "special": "infinite", "settled": True,
        }
