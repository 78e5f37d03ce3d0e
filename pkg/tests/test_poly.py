import pytest
from hypothesis import given, settings, strategies as st

from floercas.exactalg import GaussianRational as GR, TruncatedSeries as TS
from floercas.poly import (
    ALPHA,
    BETA,
    GAMMA,
    GRLEX,
    GREVLEX,
    WGREVLEX,
    EQ,
    GT,
    LT,
    Monomial,
    SparsePoly,
    order_compare,
    poly_mul,
)

A2 = Monomial(2, 0, 0)
B1 = Monomial(0, 1, 0)


def poly_from(terms):
    return SparsePoly(terms)


monomials = st.builds(
    Monomial,
    st.integers(0, 3),
    st.integers(0, 3),
    st.integers(0, 3),
)
coeffs = st.builds(GR, st.integers(-9, 9), st.integers(-9, 9))
polys = st.dictionaries(monomials, coeffs, max_size=4).map(SparsePoly)


class TestMonomialOrder:
    def test_grlex_degree_first(self):
        assert order_compare(A2, B1, GRLEX) == GT

    def test_reflexive(self):
        assert order_compare(B1, B1, GRLEX) == EQ
        assert order_compare(B1, B1, WGREVLEX) == EQ

    def test_weighted_tie_break(self):
        # alpha^2 and beta both have weight 4; precedence breaks the tie
        assert A2.weighted_degree == B1.weighted_degree == 4
        assert order_compare(A2, B1, WGREVLEX) == GT

    def test_grevlex(self):
        assert order_compare(Monomial(1, 0, 1), Monomial(0, 2, 0), GREVLEX) == LT

    @given(monomials, monomials, monomials)
    def test_multiplicative(self, m1, m2, m3):
        for order in (GRLEX, GREVLEX, WGREVLEX):
            c = order.compare(m1, m2)
            assert order.compare(m1.mul(m3), m2.mul(m3)) == c


class TestArithmetic:
    def test_difference_of_squares(self):
        assert poly_mul(ALPHA + BETA, ALPHA - BETA) == ALPHA**2 - BETA**2

    def test_gamma_square(self):
        assert poly_mul(GAMMA, GAMMA) == SparsePoly({Monomial(0, 0, 2): 1})

    def test_series_coefficient_product(self):
        one_plus_t = TS([1, 1], 2)
        p = SparsePoly({Monomial(1, 0, 0): one_plus_t})
        one = SparsePoly.constant(TS.constant(1, 2))
        assert poly_mul(p, one) == p
        assert poly_mul(p, p) == SparsePoly({Monomial(2, 0, 0): TS([1, 2], 2)})

    def test_mixed_kinds_rejected(self):
        p = SparsePoly({Monomial(1, 0, 0): TS([1, 1], 2)})
        with pytest.raises(TypeError):
            p + ALPHA
        with pytest.raises(TypeError):
            poly_mul(p, ALPHA)

    @settings(max_examples=60)
    @given(polys, polys)
    def test_commutative(self, p, q):
        assert poly_mul(p, q) == poly_mul(q, p)

    @settings(max_examples=40)
    @given(polys, polys, polys)
    def test_associative(self, p, q, r):
        assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))

    @settings(max_examples=40)
    @given(polys, polys, polys)
    def test_distributive(self, p, q, r):
        assert poly_mul(p, q + r) == poly_mul(p, q) + poly_mul(p, r)

    def test_canonical_form_prunes_zeros(self):
        p = ALPHA - ALPHA
        assert not p
        assert p.terms == {}


class TestGrading:
    def test_beta_minus_8(self):
        assert (BETA - 8).mod4_degree() == 0

    def test_level_two_relation(self):
        assert (ALPHA**2 + BETA - 8).mod4_degree() == 0

    def test_inhomogeneous(self):
        assert (ALPHA + BETA).mod4_degree() is None

    def test_series_t_counts_minus_two(self):
        # alpha * (1 + t): degrees 2 and 0 -> inhomogeneous
        p = SparsePoly({Monomial(1, 0, 0): TS([1, 1], 4)})
        assert p.mod4_degree() is None
        # alpha * t: degree 0 alongside a constant 8: homogeneous mod 4
        q = SparsePoly(
            {Monomial(1, 0, 0): TS([0, 1], 4), Monomial(0, 0, 0): TS([8], 4)}
        )
        assert q.mod4_degree() == 0

    def test_exact_homogeneity(self):
        assert (ALPHA**2).is_homogeneous(4)
        assert not (ALPHA**2 + BETA - 8).is_homogeneous()


class TestSerialization:
    def test_json_descending_order(self):
        p = ALPHA**2 + BETA - 8
        blob = p.to_json()
        assert [t["m"] for t in blob["terms"]] == [[2, 0, 0], [0, 1, 0], [0, 0, 0]]
        assert SparsePoly.from_json(blob) == p

    def test_json_series_coefficients(self):
        p = SparsePoly({Monomial(1, 0, 0): TS([1, 1], 2)})
        assert SparsePoly.from_json(p.to_json()) == p

    def test_render(self):
        assert str(ALPHA * BETA + 8 * ALPHA + GAMMA) == "alpha*beta+8*alpha+gamma"
        q = SparsePoly({Monomial(2, 0, 0): 1, Monomial(0, 1, 0): 1})
        assert q.render(("a", "b", "c")) == "a^2+b"
