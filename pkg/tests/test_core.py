"""Structure-constant container, axiom checker, and the text format."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diaskit.core import (
    MAX_DIM,
    Dialgebra,
    DialgebraError,
    parse_dialgebra,
    phi_dialgebra,
    serialize_dialgebra,
)

phis = st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.lists(
        st.fractions(min_value=-4, max_value=4, max_denominator=3),
        min_size=n, max_size=n)
).filter(lambda w: any(x != 0 for x in w))


def truncated_poly_algebra():
    # Q[t]/(t^3) with both products equal: e_i e_j = e_{i+j} while in range.
    rel = {}
    for prod in ("vdash", "dashv"):
        for i in range(1, 4):
            for j in range(1, 4):
                if i + j - 1 <= 3:
                    rel[(prod, i, j)] = [(i + j - 1, 1)]
    return Dialgebra.from_relations(3, rel)


class TestConstruction:
    def test_from_relations_basis_products(self):
        d = Dialgebra.from_relations(
            2, {("vdash", 1, 1): [(2, Fraction(1, 2))], ("dashv", 2, 1): [(1, 1)]})
        assert d.basis_product("vdash", 0, 0) == (0, Fraction(1, 2))
        assert d.basis_product("dashv", 1, 0) == (1, 0)
        assert d.basis_product("dashv", 0, 0) == (0, 0)

    def test_unknown_product_rejected(self):
        with pytest.raises(DialgebraError, match="unknown product"):
            Dialgebra.from_relations(2, {("times", 1, 1): [(1, 1)]})
        d = Dialgebra.zero(2)
        with pytest.raises(DialgebraError, match="unknown product"):
            d.multiply("star", (1, 0), (0, 1))

    def test_index_out_of_range_rejected(self):
        with pytest.raises(DialgebraError, match="out of range"):
            Dialgebra.from_relations(2, {("vdash", 1, 3): [(1, 1)]})
        with pytest.raises(DialgebraError, match="out of range"):
            Dialgebra.from_relations(2, {("vdash", 1, 1): [(5, 1)]})

    def test_dimension_bounds(self):
        with pytest.raises(DialgebraError):
            Dialgebra.zero(0)
        with pytest.raises(DialgebraError):
            Dialgebra.zero(MAX_DIM + 1)

    def test_vector_length_checked(self):
        d = Dialgebra.zero(3)
        with pytest.raises(DialgebraError, match="length"):
            d.vdash((1, 0), (0, 1, 0))

    def test_relations_roundtrip(self):
        d = truncated_poly_algebra()
        again = Dialgebra.from_relations(3, d.relations())
        assert again == d


class TestAxioms:
    def test_associative_algebra_is_dialgebra(self):
        d = truncated_poly_algebra()
        assert d.is_dialgebra()
        assert d.products_coincide()

    def test_violation_reported_with_axiom_name(self):
        # e1 |- e1 = e2 with e1 -| e1 = 0 breaks (x -| y) |- z = (x |- y) |- z.
        d = Dialgebra.from_relations(2, {("vdash", 1, 1): [(2, 1)],
                                         ("vdash", 2, 1): [(2, 1)]})
        violations = d.verify_axioms()
        assert violations
        names = {v["axiom"] for v in violations}
        assert names <= {"assoc_dashv", "absorb_dashv", "inner",
                         "absorb_vdash", "assoc_vdash"}
        assert all(len(v["triple"]) == 3 for v in violations)
        assert not d.is_dialgebra()

    @given(phis)
    @settings(max_examples=30, deadline=None)
    def test_phi_construction_satisfies_axioms(self, weights):
        d = phi_dialgebra(weights)
        assert d.is_dialgebra()

    def test_phi_zero_rejected(self):
        with pytest.raises(DialgebraError, match="nonzero"):
            phi_dialgebra((0, 0, 0))

    def test_phi_products(self):
        d = phi_dialgebra((2, 3))
        assert d.vdash((1, 0), (0, 1)) == (0, 2)
        assert d.dashv((1, 0), (0, 1)) == (3, 0)


class TestOperators:
    def test_left_op_columns(self):
        d = phi_dialgebra((1, 1))
        a = (1, 2)
        m = d.left_op("vdash", a)
        for j in range(2):
            ej = tuple(Fraction(int(t == j)) for t in range(2))
            assert m.column(j) == d.vdash(a, ej)

    def test_right_op_columns(self):
        d = phi_dialgebra((1, 2))
        a = (3, 1)
        m = d.right_op("dashv", a)
        for j in range(2):
            ej = tuple(Fraction(int(t == j)) for t in range(2))
            assert m.column(j) == d.dashv(ej, a)


class TestTextFormat:
    @given(phis)
    @settings(max_examples=25, deadline=None)
    def test_roundtrip(self, weights):
        d = phi_dialgebra(weights)
        assert parse_dialgebra(serialize_dialgebra(d)) == d

    def test_comments_and_blanks_ignored(self):
        text = ("dialgebra v1\n\n# a comment\ndim 2\n"
                "# another\nvdash 1 1 -> 2:1\n")
        d = parse_dialgebra(text)
        assert d.basis_product("vdash", 0, 0) == (0, 1)

    @pytest.mark.parametrize("text,lineno,fragment", [
        ("", 1, "empty file"),
        ("dialgebra v2\n", 1, "header"),
        ("dialgebra v1\n", 1, "missing 'dim"),
        ("dialgebra v1\ndim two\n", 2, "not an integer"),
        ("dialgebra v1\ndim 0\n", 2, "outside supported range"),
        ("dialgebra v1\ndim 2\nvdash 1 1 2:1\n", 3, "missing '->'"),
        ("dialgebra v1\ndim 2\ntimes 1 1 -> 2:1\n", 3, "unknown product"),
        ("dialgebra v1\ndim 2\nvdash 1 x -> 2:1\n", 3, "integers"),
        ("dialgebra v1\ndim 2\nvdash 1 3 -> 2:1\n", 3, "out of range"),
        ("dialgebra v1\ndim 2\nvdash 1 1 ->\n", 3, "empty term list"),
        ("dialgebra v1\ndim 2\nvdash 1 1 -> 2\n", 3, "<k>:<coeff>"),
        ("dialgebra v1\ndim 2\nvdash 1 1 -> 3:1\n", 3, "out of range"),
        ("dialgebra v1\ndim 2\nvdash 1 1 -> 2:q\n", 3, "coeff"),
        ("dialgebra v1\ndim 2\nvdash 1 1 -> 2:1\nvdash 1 1 -> 2:5\n", 4, "dup"),
    ])
    def test_errors_carry_line_numbers(self, text, lineno, fragment):
        with pytest.raises(DialgebraError) as exc:
            parse_dialgebra(text)
        message = str(exc.value)
        assert message.startswith(f"line {lineno}:")
        assert fragment in message

    def test_fractional_coefficients_survive(self):
        d = Dialgebra.from_relations(
            2, {("dashv", 1, 2): [(1, Fraction(-2, 3)), (2, Fraction(1, 7))]})
        assert parse_dialgebra(serialize_dialgebra(d)) == d
