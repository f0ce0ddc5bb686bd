from fractions import Fraction
import pytest
from nodalhilb.errors import DegreeOutOfRange, DeltaMismatch, InhomogeneousInvariant, PowerExceedsDimension
from nodalhilb.monodromy import (
    GradedRep, GradedSpace, Operator, build_h1, direct_sum, exterior_power, hilb_cohomology_rep, invariant_basis,
    invariants, macdonald_rep, nested_cohomology_rep, nested_rep_dimension, relabel, tate_twist, tensor,
    trivial_rep, wedge_invariants, zero_rep,
)
from nodalhilb.ring import WeightPoly

L = WeightPoly.L()
ONE = WeightPoly.one()


def _invariant_weights(rep) -> WeightPoly:
    return invariants(rep).weight_polynomial()


class TestOperator:
    def test_zero_entries_are_dropped(self):
        op = Operator(2, {(0, 0): 1, (0, 1): 0})
        assert dict(op.entries) == {(0, 0): 1}

    def test_entry_outside_bounds_raises(self):
        with pytest.raises(IndexError):
            Operator(2, {(2, 0): 1})

    def test_matmul(self):
        t = Operator(2, {(0, 0): 1, (1, 1): 1, (0, 1): 1})
        assert (t @ t).to_dense() == [[1, 2], [0, 1]]
        assert t @ Operator.identity(2) == t

    def test_minus_identity(self):
        t = Operator(2, {(0, 0): 1, (1, 1): 1, (0, 1): Fraction(1, 2)})
        assert t.minus_identity().to_dense() == [[0, Fraction(1, 2)], [0, 0]]
        assert Operator.identity(3).minus_identity().is_zero()

    def test_kron_and_block_sum(self):
        t = Operator(2, {(0, 0): 1, (1, 1): 1, (0, 1): 1})
        assert t.kron(Operator.identity(1)) == t
        assert t.kron(t).to_dense()[0] == [1, 1, 1, 1]
        assert t.block_sum(Operator.identity(1)).to_dense() == [[1, 1, 0], [0, 1, 0], [0, 0, 1]]


class TestGradedRep:
    def test_weights_must_be_even_and_nonnegative(self):
        with pytest.raises(ValueError):
            GradedSpace(1, (1,))
        with pytest.raises(ValueError):
            GradedRep(0, (-2,), ())

    def test_generator_count_must_match_delta(self):
        with pytest.raises(ValueError):
            GradedRep(2, (0,), (Operator.identity(1),))

    def test_generator_dimension_must_match(self):
        with pytest.raises(ValueError):
            GradedRep(1, (0,), (Operator.identity(2),))

    def test_weight_polynomial(self):
        assert GradedSpace(3, (0, 2, 2)).weight_polynomial() == 2 * L + 1
        assert zero_rep(2).weight_polynomial().is_zero()


class TestConstructions:
    def test_build_h1(self):
        h1 = build_h1(2)
        assert h1.dim == 4
        assert h1.weights == (0, 2, 0, 2)
        assert dict(h1.generators[0].entries) == {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1, (0, 1): 1}
        assert build_h1(0).dim == 0

    @pytest.mark.parametrize('rep', [
        build_h1(3),
        exterior_power(build_h1(2), 2),
        exterior_power(build_h1(3), 3),
        tensor(exterior_power(build_h1(2), 2), build_h1(2)),
        nested_cohomology_rep(2, 2, 3),
    ])
    def test_generators_commute_and_preserve_filtration(self, rep):
        assert rep.generators_commute()
        assert rep.preserves_weight_filtration()

    def test_exterior_power_dimensions(self):
        h1 = build_h1(2)
        assert exterior_power(h1, 0).dim == 1
        assert exterior_power(h1, 2).dim == 6
        assert exterior_power(h1, 4).weights == (4,)

    def test_top_exterior_power_of_one_node_is_invariant(self):
        top = exterior_power(build_h1(1), 2)
        assert top.weights == (2,)
        assert top.generators[0] == Operator.identity(1)

    def test_exterior_power_past_dimension(self):
        assert exterior_power(build_h1(1), 3).dim == 0
        with pytest.raises(PowerExceedsDimension):
            exterior_power(build_h1(1), 3, strict=True)
        with pytest.raises(ValueError):
            exterior_power(build_h1(1), -1)

    def test_tensor_requires_same_delta(self):
        with pytest.raises(DeltaMismatch):
            tensor(build_h1(1), build_h1(2))
        with pytest.raises(DeltaMismatch):
            direct_sum(build_h1(1), build_h1(2))

    def test_tate_twist_shifts_weights(self):
        assert tate_twist(build_h1(1), 2).weights == (4, 6)
        with pytest.raises(ValueError):
            tate_twist(build_h1(1), -1)

    def test_trivial_rep(self):
        assert _invariant_weights(trivial_rep(3, weight=4)) == L ** 2


class TestInvariants:
    def test_h1_invariants_are_vanishing_cycles(self):
        for delta in range(5):
            assert _invariant_weights(build_h1(delta)) == WeightPoly.constant(delta)

    def test_v_tensor_v(self):
        h1 = build_h1(1)
        assert _invariant_weights(tensor(h1, h1)) == L + 1

    def test_basis_vectors(self):
        basis = invariant_basis(build_h1(2))
        assert [weight for weight, _ in basis] == [0, 0]
        assert sorted(tuple(vector) for _, vector in basis) == [(0,), (2,)]

    def test_empty_representation(self):
        assert invariants(zero_rep(3)) == GradedSpace(0, ())

    def test_wedge_invariants_match_binomial_count(self):
        for delta in range(5):
            for l in range(min(2 * delta, 8) + 1):
                rep = exterior_power(build_h1(delta), l)
                assert _invariant_weights(rep) == wedge_invariants(l, delta), (delta, l)

    def test_inhomogeneous_kernel_is_reported(self):
        # T - id has the single row (1, -1), whose kernel mixes weights 0 and 2
        t = Operator(2, {(0, 0): 2, (0, 1): -1, (1, 1): 1})
        rep = GradedRep(1, (0, 2), (t,))
        with pytest.raises(InhomogeneousInvariant):
            invariants(rep)

    def test_product_invariants_inject(self):
        h1 = build_h1(2)
        for l in range(5):
            wedge = exterior_power(h1, l)
            assert invariants(tensor(wedge, h1)).dim >= invariants(wedge).dim * invariants(h1).dim

    def test_node_relabeling_changes_nothing(self):
        h1 = build_h1(3)
        swapped = relabel(h1, [2, 3, 0, 1, 4, 5], generator_order=[1, 0, 2])
        assert swapped.weights == h1.weights
        for l in range(4):
            assert _invariant_weights(exterior_power(swapped, l)) == _invariant_weights(exterior_power(h1, l))
        assert _invariant_weights(tensor(swapped, swapped)) == _invariant_weights(tensor(h1, h1))

    def test_relabel_requires_permutation(self):
        with pytest.raises(ValueError):
            relabel(build_h1(1), [0, 0])


class TestCohomology:
    def test_hilb_degree_range(self):
        with pytest.raises(DegreeOutOfRange):
            hilb_cohomology_rep(1, 1, 3)
        with pytest.raises(DegreeOutOfRange):
            nested_cohomology_rep(1, 1, 5)

    def test_macdonald_outside_range_is_zero(self):
        assert macdonald_rep(2, 2, 5).dim == 0
        assert macdonald_rep(2, 2, -1).dim == 0

    def test_direct_and_dual_assembly_agree(self):
        for delta in range(4):
            for m in range(5):
                for i in range(2 * m + 1):
                    dual = hilb_cohomology_rep(delta, m, i)
                    direct = hilb_cohomology_rep(delta, m, i, via_duality=False)
                    assert dual.dim == direct.dim
                    assert _invariant_weights(dual) == _invariant_weights(direct), (delta, m, i)

    def test_duality_twists_invariants(self):
        for delta in range(4):
            for m in range(5):
                for i in range(m + 1, 2 * m + 1):
                    upper = _invariant_weights(hilb_cohomology_rep(delta, m, i))
                    lower = _invariant_weights(hilb_cohomology_rep(delta, m, 2 * m - i))
                    assert upper == lower.shift(i - m)

    def test_nested_dimension_estimate(self):
        for delta in range(4):
            for m in range(4):
                for i in range(2 * m + 3):
                    assert nested_rep_dimension(delta, m, i) == nested_cohomology_rep(delta, m, i).dim

    def test_nested_degree_zero_and_top(self):
        assert _invariant_weights(nested_cohomology_rep(2, 1, 0)) == ONE
        assert _invariant_weights(nested_cohomology_rep(2, 1, 4)) == L ** 2
