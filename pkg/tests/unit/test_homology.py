"""Unit tests for coefficients, sparse elimination and homology."""
import pytest
from sympy.polys.domains import GF

from core.errors import AlgebraError, DomainError, ModelError
from core.graphs import library
from core.homology.chain_complex import (
    betti,
    betti_wedge_formula,
    boundary_columns,
    chain_complex,
    chain_vector,
    homology_class_is_zero,
)
from core.homology.coefficients import COEFFICIENTS, Coefficients, CoefficientRegistry
from core.homology.sparse import SparseMatrix, invariant_factors_from_diagonal
from core.model.chains import Chain, star_cycle
from core.model.complex import build_model


class TestCoefficients:
    """Test the coefficient registry."""

    def test_default_tags(self):
        """Test that the standard rings are registered."""
        assert COEFFICIENTS.tags() == ["f2", "f3", "f5", "f7", "q", "z"]

    def test_unknown_tag(self):
        """Test that an unknown tag raises AlgebraError."""
        with pytest.raises(AlgebraError):
            COEFFICIENTS.get("r")

    def test_case_insensitive(self):
        """Test that tags are matched case-insensitively."""
        assert COEFFICIENTS.get("Q") is COEFFICIENTS.get("q")

    def test_fields_and_characteristic(self):
        """Test field flags and characteristics."""
        assert not COEFFICIENTS.get("z").is_field
        assert COEFFICIENTS.get("q").is_field
        assert COEFFICIENTS.get("f3").characteristic == 3
        assert COEFFICIENTS.get("q").characteristic == 0

    def test_integer_inverse(self):
        """Test that only units are invertible over the integers."""
        z = COEFFICIENTS.get("z")
        assert z.inverse(z.convert(-1)) == -1
        with pytest.raises(AlgebraError):
            z.inverse(z.convert(2))

    def test_to_json(self):
        """Test plain JSON values per ring."""
        q = COEFFICIENTS.get("q")
        f2 = COEFFICIENTS.get("f2")
        assert q.to_json(q.convert(3)) == 3
        assert q.to_json(q.domain.quo(q.convert(1), q.convert(2))) == "1/2"
        assert f2.to_json(f2.convert(3)) == 1

    def test_register_custom(self):
        """Test that new rings can be registered on a private registry."""
        registry = CoefficientRegistry()
        registry.register(Coefficients("f11", "integers mod 11", GF(11)))
        assert registry.get("f11").characteristic == 11


class TestSparseMatrix:
    """Test rank and torsion by elimination."""

    def test_integer_torsion(self):
        """Test that diag(2, 3) has rank 2 and invariant factor 6."""
        m = SparseMatrix.from_integer_columns((2, 2), [{0: 2}, {1: 3}], COEFFICIENTS.get("z"))
        result = m.eliminate()
        assert result.rank == 2
        assert result.torsion == (6,)

    def test_rational_rank(self):
        """Test that the same matrix over Q has no torsion."""
        m = SparseMatrix.from_integer_columns((2, 2), [{0: 2}, {1: 3}], COEFFICIENTS.get("q"))
        assert m.eliminate().rank == 2
        assert m.eliminate().torsion == ()

    def test_mod_two_drops_even_entries(self):
        """Test that entries divisible by 2 vanish over F_2."""
        m = SparseMatrix.from_integer_columns((2, 2), [{0: 2}, {1: 3}], COEFFICIENTS.get("f2"))
        assert m.nnz == 1
        assert m.rank() == 1

    def test_dependent_columns(self):
        """Test that a repeated column does not raise the rank."""
        m = SparseMatrix.from_integer_columns(
            (3, 3), [{0: 1, 1: -1}, {1: 1, 2: -1}, {0: 1, 2: -1}], COEFFICIENTS.get("z")
        )
        assert m.rank() == 2

    def test_with_column(self):
        """Test that appending a column extends the shape."""
        m = SparseMatrix.from_integer_columns((2, 1), [{0: 1}], COEFFICIENTS.get("q"))
        wider = m.with_column({1: COEFFICIENTS.get("q").convert(1)})
        assert wider.shape == (2, 2)
        assert wider.rank() == 2

    def test_invariant_factors(self):
        """Test that a diagonal becomes a divisibility chain."""
        assert invariant_factors_from_diagonal([4, 6]) == [2, 12]
        assert invariant_factors_from_diagonal([1, 0, 3]) == [1, 3]


class TestChainComplex:
    """Test boundary matrices."""

    def test_boundary_columns_of_an_edge(self, y_model):
        """Test that an edge has boundary (end) - (start)."""
        (f0, f1), = y_model.faces[1][0]
        assert boundary_columns(y_model, 1)[0] == {f1: -1, f0: 1}

    def test_sizes(self, b4_model):
        """Test that the chain complex records the cell counts."""
        cc = chain_complex(b4_model, "z")
        assert cc.sizes == (264, 672, 384)
        assert cc.boundary(2).shape == (672, 384)
        assert cc.boundary(3).shape == (384, 0)

    def test_unknown_coefficients(self, y_model):
        """Test that a bad tag is rejected."""
        with pytest.raises(AlgebraError):
            chain_complex(y_model, "x")


class TestBetti:
    """Test Betti numbers of the standard models."""

    def test_y(self, y_model):
        """Test that Conf_2(Y) is a circle up to homotopy."""
        profile = betti(chain_complex(y_model, "z"))
        assert profile.betti == (1, 1)
        assert profile.torsion_free
        assert profile.euler == 0

    def test_interval_with_sinks(self, interval_sinks):
        """Test that Conf_2 of the interval with sinks is a circle."""
        assert betti(chain_complex(build_model(interval_sinks, 2), "z")).betti == (1, 1)

    def test_genus_thirteen(self, b4_model):
        """Test that Conf_3(B_4) has the homology of a genus 13 surface."""
        profile = betti(chain_complex(b4_model, "z"))
        assert profile.betti == (1, 26, 1)
        assert profile.torsion_free
        assert profile.euler == -24

    @pytest.mark.parametrize("tag", ["q", "f2", "f3"])
    def test_genus_thirteen_over_fields(self, b4_model, tag):
        """Test that field coefficients agree with the torsion-free integral answer."""
        assert betti(chain_complex(b4_model, tag)).betti == (1, 26, 1)

    def test_disconnected_model(self):
        """Test that b_0 counts the components of Conf_3(B_2)."""
        profile = betti(chain_complex(build_model(library.banana(2), 3), "q"))
        assert profile.betti[0] > 1

    def test_to_dict(self, y_model):
        """Test the plain dictionary form."""
        assert betti(chain_complex(y_model, "z")).to_dict() == {
            "coefficients": "z", "betti": [1, 1], "torsion": [[], []], "euler": 0,
        }

    @pytest.mark.parametrize("graph, n, k, l", [
        (library.y_graph, 2, 3, 0),
        (library.y_graph, 3, 3, 0),
        (lambda: library.star_graph(4, 0), 2, 4, 0),
        (lambda: library.star_graph(2, 1), 2, 2, 1),
        (lambda: library.star_graph(3, 1), 2, 3, 1),
    ])
    def test_wedge_formula_matches_homology(self, graph, n, k, l):
        """Test b_1 of wedges of leaves and loops against the closed formula."""
        numbers = betti(chain_complex(build_model(graph(), n), "z")).betti
        assert numbers[1] == betti_wedge_formula(n, k, l)


class TestWedgeFormula:
    """Test the closed formula on its own."""

    @pytest.mark.parametrize("n, k, l, expected", [
        (2, 3, 0, 1),
        (3, 3, 0, 13),
        (2, 4, 0, 5),
        (2, 2, 1, 7),
        (2, 3, 1, 13),
    ])
    def test_values(self, n, k, l, expected):
        """Test the formula at small parameters."""
        assert betti_wedge_formula(n, k, l) == expected

    def test_outside_range(self):
        """Test that an interval-like wedge is outside the formula's range."""
        with pytest.raises(DomainError):
            betti_wedge_formula(2, 2, 0)
        with pytest.raises(DomainError):
            betti_wedge_formula(0, 3, 0)


class TestHomologyClass:
    """Test boundary membership of cycles."""

    def test_star_cycle_not_a_boundary(self, y_graph, y_model):
        """Test that the star cycle is a nonzero class."""
        assert not homology_class_is_zero(y_model, star_cycle(y_graph, 0, 0, 1, 2))

    def test_boundary_is_zero(self, b4_model):
        """Test that the boundary of a square is a zero class."""
        from core.model.chains import boundary

        square = Chain.from_terms(b4_model.graph, 3, 2, [(b4_model.cells[2][0], 1)])
        assert homology_class_is_zero(b4_model, boundary(square), "q")

    def test_needs_a_field(self, y_graph, y_model):
        """Test that membership over the integers is refused."""
        with pytest.raises(DomainError):
            homology_class_is_zero(y_model, star_cycle(y_graph, 0, 0, 1, 2), "z")

    def test_chain_from_other_complex(self, y_graph, h_graph):
        """Test that coordinates need a chain of the same model."""
        with pytest.raises(ModelError):
            chain_vector(build_model(h_graph, 2), star_cycle(y_graph, 0, 0, 1, 2))
