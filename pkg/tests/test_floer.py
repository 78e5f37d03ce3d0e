from math import comb

import pytest

from floercas.exactalg import GaussianRational as GR
from floercas.floer import (
    basis_matrix,
    classical_ring,
    filtration_step,
    floer_cohomology,
    gamma_kernel_dims,
    gamma_quotient_ring,
    invariant_ring,
    monomial_simplex,
    primitive_dim,
    primitive_dim_exact,
    psi1_block,
    psi1_homology_dims,
    relations,
    socle_quotient_charpoly,
    socle_quotient_ring,
)
from floercas.checks import (
    expected_block_alpha,
    expected_filtration_alpha,
    expected_socle_charpoly,
)
from floercas.groebner import UniPoly
from floercas.poly import ALPHA, BETA, GAMMA, SparsePoly


def spectrum(report):
    return {root: mult for root, mult in report.roots}


class TestRelations:
    def test_level_zero(self):
        tri = relations("R", 0)
        assert tri.p1 == SparsePoly.constant(1)
        assert not tri.p2 and not tri.p3

    def test_level_one(self):
        tri = relations("R", 1)
        assert tri.components == (ALPHA, BETA - 8, GAMMA)

    def test_level_two(self):
        tri = relations("R", 2)
        assert tri.p1 == ALPHA**2 + BETA - 8
        assert tri.p2 == ALPHA * BETA + 8 * ALPHA + GAMMA
        assert tri.p3 == ALPHA * GAMMA

    def test_classical_level_two(self):
        tri = relations("q", 2)
        assert tri.p1 == ALPHA**2 + BETA
        assert tri.p2 == ALPHA * BETA + GAMMA
        assert tri.p3 == ALPHA * GAMMA
        assert tri.variable_names() == ("a", "b", "c")

    def test_reduced_level_two(self):
        tri = relations("Rbar", 2)
        assert tri.components == (ALPHA**2 + BETA - 8, ALPHA * BETA + 8 * ALPHA)

    def test_classical_homogeneous(self):
        for r in range(7):
            tri = relations("q", r)
            for p, d in zip((tri.p1, tri.p2, tri.p3), (2 * r, 2 * r + 2, 2 * r + 4)):
                if p:
                    assert p.is_homogeneous(d), (r, str(p))

    def test_deformed_mod4_homogeneous(self):
        for r in range(7):
            tri = relations("R", r)
            for p, d in zip((tri.p1, tri.p2, tri.p3), (2 * r, 2 * r + 2, 2 * r + 4)):
                if p:
                    assert p.mod4_degree() == d % 4

    def test_leading_monomials(self):
        for r in range(1, 6):
            tri = relations("R", r)
            assert tri.p1.leading_monomial() == (r, 0, 0)
            assert tri.p2.leading_monomial() == (r - 1, 1, 0)
            assert tri.p3.leading_monomial() == (r - 1, 0, 1)

    def test_bad_flavor(self):
        with pytest.raises(ValueError):
            relations("S", 1)
        with pytest.raises(ValueError):
            relations("R", -1)


class TestLevelRings:
    def test_level_one_values(self):
        ring = invariant_ring(1)
        assert ring.dim == 1
        assert not ring.normal_form(ALPHA)
        assert ring.normal_form(BETA) == SparsePoly.constant(8)
        assert not ring.normal_form(GAMMA)

    def test_dims(self):
        for r in range(7):
            assert invariant_ring(r).dim == comb(r + 2, 3)
            assert gamma_quotient_ring(r).dim == comb(r + 1, 2)
            assert classical_ring(r).dim == comb(r + 2, 3)

    def test_staircase_level_two(self):
        assert set(invariant_ring(2).basis) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_monomial_simplex_is_basis(self):
        for r in range(1, 6):
            ring = invariant_ring(r)
            simplex = monomial_simplex(r, 3)
            assert len(simplex) == ring.dim
            assert basis_matrix(ring, simplex).rank() == ring.dim

    def test_gamma_quotient_presentations_agree(self):
        # quotient by the two-term recursion + gamma equals F_r modulo gamma
        for r in range(1, 5):
            direct = gamma_quotient_ring(r)
            via_f = invariant_ring(r).extend([GAMMA])
            assert direct.basis == via_f.basis
            for g in direct.gb.generators:
                assert not via_f.normal_form(g)
            for g in via_f.gb.generators:
                assert not direct.normal_form(g)


class TestFiltration:
    def test_step_zero(self):
        step = filtration_step(0)
        assert step.dim == 1
        assert spectrum(step.eigen["alpha"]) == {GR(0): 1}
        assert spectrum(step.eigen["beta"]) == {GR(8): 1}

    def test_step_one(self):
        step = filtration_step(1)
        assert step.dim == 2
        assert spectrum(step.eigen["alpha"]) == {GR(4): 1, GR(-4): 1}
        assert spectrum(step.eigen["beta"]) == {GR(-8): 2}

    def test_step_two(self):
        step = filtration_step(2)
        assert step.dim == 3
        assert spectrum(step.eigen["alpha"]) == {GR(0): 1, GR(0, 8): 1, GR(0, -8): 1}
        assert spectrum(step.eigen["beta"]) == {GR(8): 3}

    def test_steps_complete_and_sized(self):
        for r in range(5):
            step = filtration_step(r)
            assert step.dim == r + 1
            assert step.complete()
            assert spectrum(step.eigen["alpha"]) == expected_filtration_alpha(r)
            assert spectrum(step.eigen["gamma"]) == {GR(0): r + 1}


class TestSocleQuotient:
    def test_displayed_products(self):
        for r in range(1, 6):
            assert socle_quotient_charpoly(r) == expected_socle_charpoly(r)

    def test_frozen_examples(self):
        # r=1: x^2 - 16; r=2: x^3 + 64x; r=3: x^4 - 160x^2 + 2304
        assert socle_quotient_charpoly(1) == UniPoly([-16, 0, 1])
        assert socle_quotient_charpoly(2) == UniPoly([0, 64, 0, 1])
        assert socle_quotient_charpoly(3) == UniPoly([2304, 0, -160, 0, 1])

    def test_quotient_dim(self):
        for r in range(1, 6):
            assert socle_quotient_ring(r).dim == r + 1


class TestBlocks:
    def test_level_one(self):
        block = psi1_block(1)
        assert block.dim == 1
        assert spectrum(block.eigen["alpha"]) == {GR(0): 1}
        assert spectrum(block.eigen["beta"]) == {GR(8): 1}
        assert spectrum(block.eigen["gamma"]) == {GR(0): 1}

    def test_level_two(self):
        block = psi1_block(2)
        assert block.dim == 2
        assert spectrum(block.eigen["alpha"]) == {GR(4): 1, GR(-4): 1}
        assert spectrum(block.eigen["beta"]) == {GR(-8): 2}

    def test_level_three(self):
        block = psi1_block(3)
        assert block.dim == 3
        assert spectrum(block.eigen["alpha"]) == {GR(0): 1, GR(0, 8): 1, GR(0, -8): 1}
        assert spectrum(block.eigen["beta"]) == {GR(8): 3}

    def test_levels_complete(self):
        for r in range(1, 6):
            block = psi1_block(r)
            assert block.dim == r
            assert block.complete()
            assert spectrum(block.eigen["alpha"]) == expected_block_alpha(r)

    def test_level_zero_rejected(self):
        with pytest.raises(ValueError):
            psi1_block(0)


class TestGammaStructure:
    def test_kernel_dims(self):
        assert gamma_kernel_dims(1) == (1, 1)
        assert gamma_kernel_dims(2) == (3, 4)
        assert gamma_kernel_dims(3) == (6, 9)

    def test_ideal_shift_and_nilpotency(self):
        for r in range(1, 5):
            ring = invariant_ring(r)
            for gen in relations("R", r - 1).generators():
                assert not ring.normal_form(GAMMA * gen)
            assert not ring.normal_form(GAMMA**r)
            if r >= 2:
                assert ring.normal_form(GAMMA ** (r - 1))


class TestPrimitiveParts:
    def test_closed_form_values(self):
        assert primitive_dim(1, 0) == 1
        assert primitive_dim(2, 1) == 4
        assert primitive_dim(3, 2) == 14
        assert primitive_dim(4, 0) == 1

    def test_exact_agrees_small(self):
        for g in range(1, 4):
            for k in range(g + 1):
                assert primitive_dim_exact(g, k) == primitive_dim(g, k)

    def test_bad_range(self):
        with pytest.raises(ValueError):
            primitive_dim_exact(2, 3)


class TestAssembledRing:
    def test_totals(self):
        assert floer_cohomology(1).total_dim == 1
        assert floer_cohomology(2).total_dim == 8
        assert floer_cohomology(3).total_dim == 48

    def test_top_summand_vanishes(self):
        ring = floer_cohomology(3)
        top = ring.summands[-1]
        assert top.k == 3 and top.ring.dim == 0 and top.dim == 0

    def test_json_shape(self):
        blob = floer_cohomology(2).to_json()
        assert blob["total_dim"] == 8
        assert [s["dim"] for s in blob["summands"]] == [4, 4, 0]


class TestPsi1Homology:
    def test_totals(self):
        assert psi1_homology_dims(1)["total"] == 1
        assert psi1_homology_dims(2)["total"] == 4
        assert psi1_homology_dims(3)["total"] == 16

    def test_summands_genus_two(self):
        rows = psi1_homology_dims(2)["summands"]
        assert rows == [
            {"k": 0, "multiplicity": 1, "block_dim": 2},
            {"k": 1, "multiplicity": 2, "block_dim": 1},
        ]

    def test_block_dims_match_concrete_blocks(self):
        for g in range(1, 5):
            for row in psi1_homology_dims(g)["summands"]:
                assert psi1_block(g - row["k"]).dim == row["block_dim"]
