"""Unit tests for graphs with sinks, graph documents and the standard library."""
import json

import pytest

from core.errors import GraphFormatError, InvalidGraphError
from core.graphs import library
from core.graphs.graph import (
    GraphWithSinks,
    articulation_quotient,
    articulations_brute_force,
    classify,
    subdivide_edge,
)
from core.graphs.io import dumps_graph, load_graph, parse_graph, serialize_graph


class TestGraphWithSinks:
    """Test derived vertex and edge sets."""

    def test_y_graph(self, y_graph):
        """Test that Y has one essential center and three leaves."""
        assert y_graph.vertex_count == 4
        assert y_graph.edge_count == 3
        assert y_graph.essential == {y_graph.vertex_id("c")}
        assert y_graph.is_tree
        assert y_graph.is_y_shaped

    def test_banana_valences(self, banana4):
        """Test that B_4 has two vertices of valence 4."""
        assert banana4.vertex_count == 2
        assert banana4.edge_count == 4
        assert banana4.valence == (4, 4)
        assert banana4.banana_width == 4
        assert banana4.first_betti == 3

    def test_sink_sets(self, interval_sinks):
        """Test V_{>=2}, V_{>=3} and E_W on the interval with two sinks."""
        assert interval_sinks.sink_set == {0, 1}
        assert interval_sinks.sink_edges == {0}
        assert not interval_sinks.hosts
        assert not interval_sinks.essential

    def test_bivalent_vertex_rejected(self):
        """Test that a declared non-sink vertex of valence 2 needs the override."""
        with pytest.raises(InvalidGraphError):
            GraphWithSinks(("a", "b", "c"), (False, False, False), ((0, 1), (1, 2)))
        g = GraphWithSinks(("a", "b", "c"), (False, False, False), ((0, 1), (1, 2)), allow_bivalent=True)
        assert g.hosts == {1}

    def test_bivalent_sink_accepted(self):
        """Test that sinks of valence 2 need no override."""
        g = GraphWithSinks(("a", "w", "c"), (False, True, False), ((0, 1), (1, 2)))
        assert g.sink_set == {1}

    def test_self_loop_rejected(self):
        """Test that a raw self-loop cannot be constructed."""
        with pytest.raises(InvalidGraphError):
            GraphWithSinks(("a",), (False,), ((0, 0),))

    def test_interval_detection(self):
        """Test that a single edge is an interval and Y is not."""
        edge = library.tree("I", [("a", "b")])
        assert edge.is_interval
        assert not library.y_graph().is_interval

    def test_unknown_vertex(self, y_graph):
        """Test that looking up an unknown vertex name raises."""
        with pytest.raises(InvalidGraphError):
            y_graph.vertex_id("nowhere")


class TestClassify:
    """Test essential vertices and articulations."""

    def test_h_fully_articulated(self, h_graph):
        """Test that both essential vertices of H are articulations."""
        result = classify(h_graph)
        assert result.essential == {h_graph.vertex_id("L"), h_graph.vertex_id("R")}
        assert result.essential <= result.articulations
        assert result.fully_articulated

    def test_banana_not_articulated(self, banana3):
        """Test that no vertex of a banana graph disconnects it."""
        result = classify(banana3)
        assert not result.articulations
        assert not result.fully_articulated

    @pytest.mark.parametrize("factory", [
        library.y_graph, library.h_graph, library.bowtie, library.figure_eight,
        lambda: library.banana(4), lambda: library.star_graph(3, 1),
    ])
    def test_matches_brute_force(self, factory):
        """Test that articulation points agree with vertex deletion."""
        g = factory()
        assert classify(g).articulations == articulations_brute_force(g)

    def test_bowtie_center(self, bowtie):
        """Test that the shared vertex of the bowtie is its only articulation."""
        assert classify(bowtie).articulations == {bowtie.vertex_id("v")}


class TestParseGraph:
    """Test graph documents."""

    def test_y_document(self):
        """Test that a Y document parses into 4 vertices and 3 edges."""
        g = parse_graph({
            "vertices": [{"id": "c"}, {"id": "a"}, {"id": "b"}, {"id": "d"}],
            "edges": [["c", "a"], ["c", "b"], ["c", "d"]],
        })
        assert g.vertex_count == 4
        assert g.edge_count == 3
        assert g.essential == {0}

    def test_self_loop_subdivided(self):
        """Test that a self-loop becomes two edges through a fresh vertex."""
        g = parse_graph({"vertices": [{"id": "v"}], "edges": [["v", "v"]]}, allow_bivalent=True)
        assert g.vertex_count == 2
        assert g.edge_count == 2
        assert g.edges == ((0, 1), (1, 0))
        assert g.subdivision == (False, True)
        assert g.names[1] == "v.loop0"

    def test_json_text(self):
        """Test that JSON text and bytes are accepted."""
        text = json.dumps({"vertices": [{"id": "a"}, {"id": "b"}], "edges": [["a", "b"]]})
        assert parse_graph(text) == parse_graph(text.encode())

    @pytest.mark.parametrize("document", [
        "not json",
        "[1, 2]",
        {"vertices": {}, "edges": []},
        {"vertices": [{"id": "a"}, {"id": "a"}], "edges": []},
        {"vertices": [{"id": "a"}], "edges": [["a", "b"]]},
        {"vertices": [{"id": "a"}, {"id": "b"}], "edges": [["a"]]},
        {"vertices": [{"id": 3}], "edges": []},
        {"vertices": [{"id": "a", "sink": "yes"}], "edges": []},
    ])
    def test_malformed_documents(self, document):
        """Test that malformed documents raise GraphFormatError."""
        with pytest.raises(GraphFormatError):
            parse_graph(document)

    def test_serialize_round_trip(self):
        """Test that parse, serialize and parse again gives the same graph."""
        g = library.star_graph(2, 1)
        assert parse_graph(serialize_graph(g)) == g
        assert json.loads(dumps_graph(g)) == serialize_graph(g)

    def test_load_graph_names_from_stem(self, tmp_path):
        """Test that unnamed documents take the file stem as their name."""
        path = tmp_path / "edge.json"
        path.write_text(json.dumps({"vertices": [{"id": "a"}, {"id": "b"}], "edges": [["a", "b"]]}))
        assert load_graph(path).label() == "edge"

    def test_load_missing_file(self, tmp_path):
        """Test that a missing file is a format error."""
        with pytest.raises(GraphFormatError):
            load_graph(tmp_path / "absent.json")


class TestLibrary:
    """Test that shipped fixtures equal the factories."""

    @pytest.mark.parametrize("name, factory", [
        ("Y", library.y_graph),
        ("H", library.h_graph),
        ("I2sinks", library.interval_with_sinks),
        ("bowtie", library.bowtie),
        ("figure8", library.figure_eight),
        ("B1", lambda: library.banana(1)),
        ("B2", lambda: library.banana(2)),
        ("B3", lambda: library.banana(3)),
        ("B4", lambda: library.banana(4)),
        ("B5", lambda: library.banana(5)),
        ("B6", lambda: library.banana(6)),
        ("Y4_0", lambda: library.star_graph(4, 0)),
        ("Y2_1", lambda: library.star_graph(2, 1)),
        ("Y3_1", lambda: library.star_graph(3, 1)),
    ])
    def test_fixture_matches_factory(self, fixtures_dir, name, factory):
        """Test that data/graphs/<name>.json loads to the factory graph."""
        assert load_graph(fixtures_dir / f"{name}.json") == factory()

    def test_star_with_loops(self):
        """Test that Y^1_2 has a subdivided loop at the center."""
        g = library.star_graph(2, 1)
        assert g.vertex_count == 4
        assert g.edge_count == 4
        assert g.valence[0] == 4
        assert g.first_betti == 1

    def test_tree_rejects_cycles(self):
        """Test that the tree constructor refuses a cycle."""
        with pytest.raises(InvalidGraphError):
            library.tree("C", [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d")])


class TestSurgery:
    """Test subdivision and articulation quotients."""

    def test_subdivide_edge(self, y_graph):
        """Test that subdividing keeps the edge id for the first half."""
        finer = subdivide_edge(y_graph, 0, False)
        assert finer.vertex_count == 5
        assert finer.edge_count == 4
        assert finer.edges[0] == (0, 4)
        assert finer.edges[3] == (4, y_graph.edges[0][1])
        assert finer.subdivision[4]

    def test_subdivide_unknown_edge(self, y_graph):
        """Test that subdividing a missing edge raises."""
        with pytest.raises(InvalidGraphError):
            subdivide_edge(y_graph, 7, False)

    def test_bowtie_quotient(self, bowtie):
        """Test that the bowtie quotient at v has two sinks and keeps the four edges at v."""
        v = bowtie.vertex_id("v")
        quotient = articulation_quotient(bowtie, v)
        assert quotient.graph.vertex_count == 3
        assert quotient.sinks == {1, 2}
        assert quotient.graph.edge_count == 4
        assert quotient.edge_map[1] is None
        assert quotient.vertex_map[v] == 0

    def test_h_quotient(self, h_graph):
        """Test that the H quotient at L has one sink per branch."""
        quotient = articulation_quotient(h_graph, h_graph.vertex_id("L"))
        assert len(quotient.sinks) == 3
        assert quotient.graph.edge_count == 3
        assert quotient.graph.label() == "H/L"

    def test_quotient_needs_articulation(self, banana3):
        """Test that a non-articulation vertex is refused."""
        with pytest.raises(InvalidGraphError):
            articulation_quotient(banana3, 0)
