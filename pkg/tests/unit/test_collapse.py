"""Unit tests for free-face collapses and homotopy dimension bounds."""
import pytest

from core.collapse import (
    COLLAPSE_POLICIES,
    CollapsePolicy,
    CollapsePolicyRegistry,
    collapse,
    homotopy_dimension_upper,
)
from core.errors import ModelError
from core.graphs import library
from core.homology.chain_complex import betti, chain_complex
from core.model.complex import build_model, components


class TestCollapse:
    """Test the collapse loop."""

    def test_one_particle_on_a_tree(self, y_graph):
        """Test that Conf_1(Y) collapses to a single vertex."""
        trace = collapse(build_model(y_graph, 1))
        assert trace.survivor.counts == (1,)
        assert trace.removed == 3

    @pytest.mark.parametrize("k", [3, 4])
    def test_banana_two_particles_is_a_graph(self, k):
        """Test that Conf_2(B_k) collapses onto a one-dimensional complex."""
        trace = collapse(build_model(library.banana(k), 2))
        assert trace.survivor.dimension == 1

    def test_input_is_not_mutated(self, y_model):
        """Test that collapsing leaves the source complex untouched."""
        before = y_model.counts
        collapse(y_model)
        assert y_model.counts == before

    def test_idempotent(self, b4_model):
        """Test that the survivor has no free pair left."""
        survivor = collapse(b4_model).survivor
        assert collapse(survivor).removed == 0

    def test_pairs_are_faces(self, b4_model):
        """Test that every removed cell is a face of its partner."""
        for d, tau, sigma in collapse(b4_model).pairs:
            faces = {face for pair in b4_model.faces[d + 1][sigma] for face in pair}
            assert tau in faces

    def test_counts_balance(self, b4_model):
        """Test that each pair removes one cell from two adjacent dimensions."""
        trace = collapse(b4_model)
        assert sum(b4_model.counts) - sum(trace.survivor.counts) == 2 * trace.removed
        assert trace.survivor.euler == b4_model.euler

    @pytest.mark.parametrize("policy", ["greedy", "staged", "shuffled"])
    def test_betti_preserved(self, b4_model, policy):
        """Test that every policy preserves homology and connectivity."""
        survivor = collapse(b4_model, policy, seed=3).survivor
        assert betti(chain_complex(survivor, "q")).betti == (1, 26, 1)
        assert components(survivor) == 1

    def test_seeded_shuffle_is_deterministic(self, b4_model):
        """Test that the same seed reproduces the same pairs."""
        first = collapse(b4_model, "shuffled", seed=5)
        second = collapse(b4_model, "shuffled", seed=5)
        assert first.pairs == second.pairs

    def test_to_dict(self, y_graph):
        """Test the plain dictionary form of a trace."""
        document = collapse(build_model(y_graph, 1)).to_dict()
        assert document["policy"] == "greedy"
        assert document["source_counts"] == [4, 3]
        assert document["survivor_counts"] == [1]
        assert document["survivor_dimension"] == 0
        assert len(document["pairs"]) == 3
        assert all(pair[0] == 0 for pair in document["pairs"])


class TestPolicies:
    """Test the policy registry."""

    def test_default_policies(self):
        """Test that the three standard policies are registered."""
        assert COLLAPSE_POLICIES.names() == ["greedy", "shuffled", "staged"]

    def test_unknown_policy(self, y_model):
        """Test that an unknown policy name raises ModelError."""
        with pytest.raises(ModelError):
            COLLAPSE_POLICIES.get("backwards")
        with pytest.raises(ModelError):
            collapse(y_model, "backwards")

    def test_custom_policy_object(self, y_model):
        """Test that a policy object can be passed directly."""
        reverse = CollapsePolicy(
            "reverse", "highest index first",
            lambda c, d, seed: [(-j,) for j in range(c.count(d))],
        )
        trace = collapse(y_model, reverse)
        assert trace.policy == "reverse"
        assert trace.survivor.euler == y_model.euler

    def test_private_registry(self):
        """Test that registering on a private registry leaves the global one alone."""
        registry = CollapsePolicyRegistry()
        registry.register(CollapsePolicy("noop", "canonical", COLLAPSE_POLICIES.get("greedy").rank))
        assert "noop" in registry.names()
        assert "noop" not in COLLAPSE_POLICIES.names()


class TestHomotopyDimension:
    """Test upper bounds on the homotopy dimension."""

    def test_tree_bound(self, h_graph):
        """Test that the tree bound gives 1 for two particles on H."""
        bound = homotopy_dimension_upper(build_model(h_graph, 2))
        assert bound.value == 1
        assert "tree" in bound.achieved
        assert bound.bounds["tree"] == 1

    def test_surface(self, b4_model):
        """Test that Conf_3(B_4) has homotopy dimension bound 2."""
        bound = homotopy_dimension_upper(b4_model)
        assert bound.value == 2
        assert "tree" not in bound.bounds
        assert bound.bounds["cells"] == 2

    def test_given_survivor(self, y_model):
        """Test that a precomputed survivor is used as is."""
        survivor = collapse(y_model).survivor
        bound = homotopy_dimension_upper(y_model, survivor)
        assert bound.bounds["survivor"] == survivor.dimension
        assert bound.to_dict()["value"] == bound.value

    @pytest.mark.slow
    def test_four_particles_on_h(self, h_graph):
        """Test that four particles on H give homotopy dimension bound 2."""
        assert homotopy_dimension_upper(build_model(h_graph, 4)).value == 2
