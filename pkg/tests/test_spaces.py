"""Derivation and diderivation solvers and their cross-characterizations."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from diaskit.catalog import instantiate
from diaskit.core import Dialgebra, phi_dialgebra
from diaskit.ratlin import Matrix, unit_vector
from diaskit.spaces import (
    check_characterizations,
    check_closures,
    derivation_space,
    diderivation_space,
    inner_derivation,
    inner_derivations,
    inner_diderivation,
    inner_diderivations,
    subspace_matrices,
)

phis = st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.lists(
        st.fractions(min_value=-3, max_value=3, max_denominator=2),
        min_size=n, max_size=n)
).filter(lambda w: any(x != 0 for x in w))


def basis_vectors(n):
    return [unit_vector(n, i) for i in range(n)]


def is_derivation(d: Dialgebra, t: Matrix) -> bool:
    for prod in ("vdash", "dashv"):
        for x in basis_vectors(d.dim):
            for y in basis_vectors(d.dim):
                lhs = t.apply(d.multiply(prod, x, y))
                rhs = tuple(
                    a + b for a, b in zip(
                        d.multiply(prod, t.apply(x), y),
                        d.multiply(prod, x, t.apply(y))))
                if lhs != rhs:
                    return False
    return True


def is_diderivation(d: Dialgebra, t: Matrix) -> bool:
    # One shared expansion for both products: the left factor is absorbed
    # on the left, the right factor on the right.
    for prod in ("vdash", "dashv"):
        for x in basis_vectors(d.dim):
            for y in basis_vectors(d.dim):
                lhs = t.apply(d.multiply(prod, x, y))
                rhs = tuple(
                    a + b for a, b in zip(
                        d.dashv(t.apply(x), y),
                        d.vdash(x, t.apply(y))))
                if lhs != rhs:
                    return False
    return True


class TestKnownSpaces:
    def test_two_dim_corner(self):
        space = diderivation_space(instantiate("Dias2_1"))
        assert space.dim == 1
        assert subspace_matrices(space, 2) == [Matrix([[0, 0], [1, 0]])]

    def test_two_dim_zero_space(self):
        assert diderivation_space(instantiate("Dias2_4")).dim == 0

    def test_three_dim_samples(self):
        assert diderivation_space(instantiate("Dias3_8")).contains(
            Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]]).flatten())
        ten = diderivation_space(instantiate("Dias3_10"))
        assert ten.dim == 2

    def test_associative_case_spaces_agree(self):
        rel = {}
        for prod in ("vdash", "dashv"):
            rel[(prod, 1, 1)] = [(2, 1)]
        d = Dialgebra.from_relations(3, rel)
        assert d.products_coincide()
        assert derivation_space(d) == diderivation_space(d)


class TestDefiningIdentities:
    @given(phis)
    @settings(max_examples=20, deadline=None)
    def test_derivation_basis_satisfies_rule(self, weights):
        d = phi_dialgebra(weights)
        for t in subspace_matrices(derivation_space(d), d.dim):
            assert is_derivation(d, t)

    @given(phis)
    @settings(max_examples=20, deadline=None)
    def test_diderivation_basis_satisfies_rule(self, weights):
        d = phi_dialgebra(weights)
        for t in subspace_matrices(diderivation_space(d), d.dim):
            assert is_diderivation(d, t)

    def test_diderivation_rule_constrains_zero_products(self):
        # In Dias2_1 the product e2 * e2 vanishes for both products, yet
        # the mixed expansion of the rule still rules out candidates such
        # as the identity matrix.
        d = instantiate("Dias2_1")
        assert not is_diderivation(d, Matrix.identity(2))


class TestInnerOperators:
    @given(phis)
    @settings(max_examples=20, deadline=None)
    def test_inner_matrices_from_multiplication_ops(self, weights):
        d = phi_dialgebra(weights)
        for a in basis_vectors(d.dim):
            ad = inner_derivation(d, a)
            assert ad == d.right_op("dashv", a) - d.left_op("vdash", a)
            di = inner_diderivation(d, a)
            assert di == d.right_op("vdash", a) - d.left_op("dashv", a)

    @given(phis)
    @settings(max_examples=15, deadline=None)
    def test_inner_inside_full_spaces(self, weights):
        d = phi_dialgebra(weights)
        assert inner_derivations(d).is_subspace_of(derivation_space(d))
        assert inner_diderivations(d).is_subspace_of(diderivation_space(d))


class TestCharacterizations:
    @given(phis)
    @settings(max_examples=15, deadline=None)
    def test_routes_agree_on_phi_family(self, weights):
        report = check_characterizations(phi_dialgebra(weights))
        assert report["derivations"]["left_route_equal"]
        assert report["derivations"]["right_route_equal"]
        assert report["diderivations"]["operator_route_equal"]

    def test_routes_agree_on_fixed_entries(self):
        for name, params in (("Dias2_2", None),
                             ("Dias2_3", {"lam": Fraction(2)}),
                             ("Dias3_4", None),
                             ("Dias3_13", None)):
            report = check_characterizations(instantiate(name, params))
            assert report["diderivations"]["operator_route_equal"], name


class TestClosures:
    @given(phis)
    @settings(max_examples=10, deadline=None)
    def test_closure_report_all_green(self, weights):
        report = check_closures(phi_dialgebra(weights))
        for key, value in report.items():
            if isinstance(value, bool):
                assert value, key
