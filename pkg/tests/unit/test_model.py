"""Unit tests for the cube complex model and its chains."""
import itertools

import pytest

from core.errors import ModelError
from core.graphs import library
from core.graphs.graph import articulation_quotient
from core.homology.chain_complex import homology_class_is_zero
from core.model.cells import (
    CombConfig,
    Cube,
    Move,
    MoveKind,
    at_vertex,
    on_edge,
    validate_config,
    validate_cube,
)
from core.model.chains import Chain, boundary, cube_boundary, project_cycle, star_cycle
from core.model.complex import (
    build_model,
    components,
    dimension_bound,
    enumerate_configurations,
    relabel_cells,
)


class TestBuildModel:
    """Test cell counts of the standard examples."""

    def test_y_two_particles(self, y_model):
        """Test that Conf_2(Y) has 18 vertices and 18 edges."""
        assert y_model.counts == (18, 18)
        assert y_model.dimension == 1
        assert y_model.euler == 0
        assert components(y_model) == 1

    def test_interval_with_sinks(self, interval_sinks):
        """Test that Conf_2([0,1], {0,1}) consists of four edges on four vertices."""
        c = build_model(interval_sinks, 2)
        assert c.counts == (4, 4)
        assert components(c) == 1

    def test_banana_three_particles(self, b4_model):
        """Test the genus-13 surface model."""
        assert b4_model.counts == (264, 672, 384)
        assert b4_model.dimension == 2
        assert b4_model.euler == -24

    def test_star_with_loop(self):
        """Test cell counts of Conf_2(Y^1_2)."""
        c = build_model(library.star_graph(2, 1), 2)
        assert c.counts == (38, 60, 16)

    def test_one_particle_is_the_graph(self, y_graph):
        """Test that Conf_1(Y) is a subdivided Y with four vertices."""
        c = build_model(y_graph, 1)
        assert c.counts == (4, 3)

    def test_banana_two_disconnected(self):
        """Test that three particles on B_2 cannot reorder."""
        c = build_model(library.banana(2), 3)
        assert components(c) > 1

    def test_particle_count_must_be_positive(self, y_graph):
        """Test that n = 0 is rejected."""
        with pytest.raises(ModelError):
            build_model(y_graph, 0)

    def test_dimension_bound(self, b4_model, banana4, interval_sinks):
        """Test min{n, |V_{>=2}| + |E_W|}."""
        assert dimension_bound(banana4, 3) == 2
        assert b4_model.dimension <= dimension_bound(banana4, 3)
        assert dimension_bound(interval_sinks, 5) == 1

    def test_every_cell_is_valid(self, y_graph, b4_model):
        """Test that enumerated cubes pass validation."""
        for level in b4_model.cells:
            for cube in level:
                validate_cube(b4_model.graph, cube)
        for config in enumerate_configurations(y_graph, 3):
            validate_config(y_graph, config)

    def test_configurations_sorted_and_unique(self, h_graph):
        """Test that 0-cubes come out in canonical order without repeats."""
        configs = enumerate_configurations(h_graph, 2)
        assert configs == sorted(set(configs))

    def test_face_index_matches_faces(self, b4_model):
        """Test that resolving two axes in either order lands on the same vertex."""
        for j in range(b4_model.count(2)):
            corner = b4_model.face_index(2, j, {0: 1, 1: 0})
            via_first = b4_model.faces[1][b4_model.faces[2][j][0][1]][0][0]
            assert corner == via_first

    def test_subcomplex_of_everything(self, y_model):
        """Test that keeping every cell reproduces the complex."""
        keep = [range(count) for count in y_model.counts]
        assert y_model.subcomplex(keep) == y_model

    def test_subcomplex_must_be_closed(self, y_model):
        """Test that keeping an edge without its vertices raises."""
        with pytest.raises(ModelError):
            y_model.subcomplex([[], [0]])

    def test_index_of_foreign_cube(self, y_model):
        """Test that looking up a cube from another complex raises."""
        foreign = Cube(CombConfig((at_vertex(0),)))
        assert not y_model.contains(foreign)
        with pytest.raises(ModelError):
            y_model.index(foreign)

    def test_relabeling_permutes_cells(self, banana3):
        """Test that every relabeling of particles maps the cells onto themselves."""
        c = build_model(banana3, 3)
        for image in itertools.permutations((1, 2, 3)):
            permutation = dict(zip((1, 2, 3), image))
            for level in c.cells:
                assert relabel_cells(level, permutation) == list(level)

    def test_relabel_moves_locations(self):
        """Test that particle i's location ends up at position permutation[i]."""
        config = CombConfig((at_vertex(0), on_edge(1, 0)))
        assert config.relabel({1: 2, 2: 1}) == CombConfig((on_edge(1, 0), at_vertex(0)))
        cube = Cube(config, (Move(1, MoveKind.VERTEX_TO_EDGE, 0, 2),))
        swapped = cube.relabel({1: 2, 2: 1})
        assert swapped.moves == (Move(2, MoveKind.VERTEX_TO_EDGE, 0, 2),)
        assert swapped.base == config.relabel({1: 2, 2: 1})


class TestCells:
    """Test validation of configurations and cubes."""

    def test_two_particles_on_one_vertex(self, y_graph):
        """Test that a non-sink vertex holds one particle."""
        with pytest.raises(ModelError):
            validate_config(y_graph, CombConfig((at_vertex(0), at_vertex(0))))

    def test_particles_share_a_sink(self, interval_sinks):
        """Test that sinks hold any number of particles."""
        validate_config(interval_sinks, CombConfig((at_vertex(0), at_vertex(0), at_vertex(0))))

    def test_leaf_is_not_a_spot(self, y_graph):
        """Test that particles never rest on a non-sink leaf."""
        with pytest.raises(ModelError):
            validate_config(y_graph, CombConfig((at_vertex(1),)))

    def test_slots_must_be_compact(self, y_graph):
        """Test that edge slots count from zero without gaps."""
        with pytest.raises(ModelError):
            validate_config(y_graph, CombConfig((on_edge(0, 1),)))

    def test_move_must_be_available(self, y_graph):
        """Test that only particles resting on a vertex can move."""
        base = CombConfig((on_edge(0, 0), at_vertex(0)))
        validate_cube(y_graph, Cube(base, (Move(2, MoveKind.VERTEX_TO_EDGE, 0, 1),)))
        with pytest.raises(ModelError):
            validate_cube(y_graph, Cube(base, (Move(1, MoveKind.VERTEX_TO_EDGE, 0, 0),)))

    def test_competing_transits(self, interval_sinks):
        """Test that two particles cannot cross the same sink edge at once."""
        base = CombConfig((at_vertex(0), at_vertex(0)))
        moves = (
            Move(1, MoveKind.SINK_EDGE_TRANSIT, 0, 0),
            Move(2, MoveKind.SINK_EDGE_TRANSIT, 0, 0),
        )
        validate_cube(interval_sinks, Cube(base, moves[:1]))
        with pytest.raises(ModelError):
            validate_cube(interval_sinks, Cube(base, moves))


class TestChains:
    """Test chains, boundaries and the star cycle."""

    def test_boundary_squared(self, b4_model):
        """Test that the boundary of a boundary vanishes cube by cube."""
        g = b4_model.graph
        for cube in b4_model.cells[2]:
            chain = Chain.from_terms(g, 3, 1, cube_boundary(g, cube))
            assert boundary(chain).is_zero

    def test_chain_arithmetic(self, y_model):
        """Test that terms combine and cancel."""
        g = y_model.graph
        edge = y_model.cells[1][0]
        chain = Chain.from_terms(g, 2, 1, [(edge, 2), (edge, -1)])
        assert chain.as_dict() == {edge: 1}
        assert (chain - chain).is_zero
        assert (-chain).as_dict() == {edge: -1}

    def test_mixed_dimensions_rejected(self, y_model):
        """Test that a chain holds cubes of a single dimension."""
        with pytest.raises(ModelError):
            Chain.from_terms(y_model.graph, 2, 1, [(y_model.cells[0][0], 1)])

    def test_star_cycle_on_y(self, y_graph, y_model):
        """Test that the star cycle has twelve edges and generates H_1(Conf_2(Y))."""
        z = star_cycle(y_graph, 0, 0, 1, 2)
        assert len(z) == 12
        assert boundary(z).is_zero
        assert not homology_class_is_zero(y_model, z, "q")

    def test_star_cycle_particle_swap(self, y_graph, y_model):
        """Test that exchanging the two particles gives the same class."""
        z = star_cycle(y_graph, 0, 0, 1, 2)
        swapped = star_cycle(y_graph, 0, 0, 1, 2, p=2, q=1)
        assert homology_class_is_zero(y_model, z - swapped, "q")

    def test_star_cycle_edge_swap(self, y_graph, y_model):
        """Test that exchanging e1 and e2 reverses the class."""
        z = star_cycle(y_graph, 0, 0, 1, 2)
        reversed_ = star_cycle(y_graph, 0, 1, 0, 2)
        assert homology_class_is_zero(y_model, z + reversed_, "q")

    def test_star_cycle_needs_essential_vertex(self, y_graph):
        """Test that a leaf cannot carry a star cycle."""
        with pytest.raises(ModelError):
            star_cycle(y_graph, 1, 0, 1, 2)

    def test_star_cycle_parking(self, y_graph):
        """Test that extra particles must be parked away from the star."""
        with pytest.raises(ModelError):
            star_cycle(y_graph, 0, 0, 1, 2, n=3)
        with pytest.raises(ModelError):
            star_cycle(y_graph, 0, 0, 1, 2, n=3, parking={3: on_edge(0, 0)})


class TestProjection:
    """Test pushing star cycles into articulation quotients."""

    @pytest.mark.parametrize("factory, vertex", [
        (library.bowtie, "v"),
        (library.h_graph, "L"),
        (library.h_graph, "R"),
    ])
    def test_projected_star_is_nonzero(self, factory, vertex):
        """Test that the projected star cycle survives in the quotient model."""
        g = factory()
        v = g.vertex_id(vertex)
        e1, e2, e3 = g.incident_edges[v][:3]
        quotient = articulation_quotient(g, v)
        projected = project_cycle(star_cycle(g, v, e1, e2, e3), quotient)
        assert boundary(projected).is_zero
        assert not homology_class_is_zero(build_model(quotient.graph, 2), projected, "q")

    def test_projection_needs_matching_graph(self, y_graph, h_graph):
        """Test that cycles only project into quotients of their own graph."""
        quotient = articulation_quotient(h_graph, h_graph.vertex_id("L"))
        with pytest.raises(ModelError):
            project_cycle(star_cycle(y_graph, 0, 0, 1, 2), quotient)
