"""Structural invariants of a dialgebra.

The annihilator is the span of all differences ``a dashv b - a vdash b``;
it measures how far the two products are from coinciding.  The bar-center
collects the elements that multiply to zero from the outside on the bar
side (``z vdash x = 0`` and ``x dashv z = 0`` for all x).  Bar units are
the affine counterpart: ``e vdash x = x`` and ``x dashv e = x``.  The set
of bar units, the halo, is empty or a coset of the bar-center.

Skew-symmetrising the two products gives the bracket
``[a, b] = a dashv b - b vdash a``.  The bracket satisfies the Leibniz
identity in one chirality only; rather than hard-coding which one, the
checks below evaluate both on all basis triples and report what holds.

The combined space pairs diderivations with derivations under the
bracket ``<(s, d), (s', d')> = ([s, d'], [d, d'])``; its Leibniz identity
and two distinguished ideals are checked the same computed way.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import Dialgebra
from .ratlin import (
    AffineSubspace,
    Matrix,
    Subspace,
    Vector,
    commutator,
    nullspace,
    solve_affine,
    sub_vectors,
    unit_vector,
    vector,
    zero_vector,
)
from .spaces import (
    derivation_space,
    diderivation_space,
    inner_derivations,
    inner_diderivations,
    subspace_matrices,
)


def annihilator(d: Dialgebra) -> Subspace:
    """Span of all ``a dashv b - a vdash b`` over basis pairs."""
    n = d.dim
    gens = []
    for i in range(n):
        for j in range(n):
            gens.append(sub_vectors(d.basis_product("dashv", i, j), d.basis_product("vdash", i, j)))
    return Subspace(n, gens)


def bar_center(d: Dialgebra) -> Subspace:
    """Elements z with ``z vdash x = 0`` and ``x dashv z = 0`` for all x."""
    n = d.dim
    rows: list[list[Fraction]] = []
    for j in range(n):
        ej = unit_vector(n, j)
        for m in (d.right_op("vdash", ej), d.left_op("dashv", ej)):
            rows.extend(list(r) for r in m.rows)
    return Subspace(n, nullspace(Matrix(rows, ncols=n)))


def halo(d: Dialgebra) -> AffineSubspace:
    """The set of bar units, as an affine subspace (possibly empty).

    The homogeneous part of the bar-unit system is the bar-center
    system, so a nonempty halo is automatically a bar-center coset.
    """
    n = d.dim
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for j in range(n):
        ej = unit_vector(n, j)
        for m in (d.right_op("vdash", ej), d.left_op("dashv", ej)):
            rows.extend(list(r) for r in m.rows)
            rhs.extend(ej)
    solution = solve_affine(Matrix(rows, ncols=n), rhs)
    if solution is None:
        return AffineSubspace(None, Subspace(n))
    point, kernel = solution
    return AffineSubspace(point, Subspace(n, kernel))


bar_units = halo


def is_unital(d: Dialgebra) -> bool:
    return not halo(d).is_empty


# -- the skew bracket ----------------------------------------------------


class LeibnizAlgebra:
    """The bracket algebra ``[a, b] = a dashv b - b vdash a``."""

    __slots__ = ("dim", "cube", "left_identity_holds", "right_identity_holds")

    def __init__(self, d: Dialgebra):
        n = d.dim
        self.dim = n
        self.cube = [
            [
                sub_vectors(d.basis_product("dashv", i, j), d.basis_product("vdash", j, i))
                for j in range(n)
            ]
            for i in range(n)
        ]
        self.left_identity_holds = not self.left_identity_violations()
        self.right_identity_holds = not self.right_identity_violations()

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        xv, yv = vector(x), vector(y)
        out = [Fraction(0)] * n
        for i, xi in enumerate(xv):
            if not xi:
                continue
            for j, yj in enumerate(yv):
                if not yj:
                    continue
                cij = self.cube[i][j]
                for k in range(n):
                    if cij[k]:
                        out[k] += xi * yj * cij[k]
        return tuple(out)

    def left_identity_violations(self) -> list[tuple[int, int, int]]:
        """Triples where ``[x,[y,z]] != [[x,y],z] + [y,[x,z]]``."""
        return self._violations(
            lambda x, y, z: self.bracket(x, self.bracket(y, z)),
            lambda x, y, z: vector(
                a + b
                for a, b in zip(
                    self.bracket(self.bracket(x, y), z),
                    self.bracket(y, self.bracket(x, z)),
                )
            ),
        )

    def right_identity_violations(self) -> list[tuple[int, int, int]]:
        """Triples where ``[[x,y],z] != [[x,z],y] + [x,[y,z]]``."""
        return self._violations(
            lambda x, y, z: self.bracket(self.bracket(x, y), z),
            lambda x, y, z: vector(
                a + b
                for a, b in zip(
                    self.bracket(self.bracket(x, z), y),
                    self.bracket(x, self.bracket(y, z)),
                )
            ),
        )

    def _violations(self, lhs, rhs) -> list[tuple[int, int, int]]:
        n = self.dim
        basis = [unit_vector(n, i) for i in range(n)]
        bad = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if lhs(basis[i], basis[j], basis[k]) != rhs(basis[i], basis[j], basis[k]):
                        bad.append((i, j, k))
        return bad


def leibniz_of(d: Dialgebra) -> LeibnizAlgebra:
    return LeibnizAlgebra(d)


# -- combined derivation space -------------------------------------------

BiderElement = tuple[Matrix, Matrix]


def bider_bracket(x: BiderElement, y: BiderElement) -> BiderElement:
    """``<(s, d), (s', d')> = ([s, d'], [d, d'])``."""
    s, dd = x
    s2, dd2 = y
    return (commutator(s, dd2), commutator(dd, dd2))


def _flatten_pair(x: BiderElement) -> Vector:
    return x[0].flatten() + x[1].flatten()


def _pair_space(n: int, firsts: Sequence[Matrix], seconds: Sequence[Matrix]) -> Subspace:
    gens = [m.flatten() + zero_vector(n * n) for m in firsts]
    gens += [zero_vector(n * n) + m.flatten() for m in seconds]
    return Subspace(2 * n * n, gens)


def bider_basis(d: Dialgebra) -> list[BiderElement]:
    """Basis of the combined space: diderivations paired with zero, then
    zero paired with derivations."""
    n = d.dim
    zero = Matrix.zero(n, n)
    out: list[BiderElement] = []
    for m in subspace_matrices(diderivation_space(d), n):
        out.append((m, zero))
    for m in subspace_matrices(derivation_space(d), n):
        out.append((zero, m))
    return out


def check_bider_leibniz(d: Dialgebra) -> dict:
    """Verify the combined bracket's identities and ideals by computation.

    Checks, on all basis triples of the combined space: closure of the
    bracket, both Leibniz chiralities, that inner-diderivations-plus-
    derivations and inner-diderivations-plus-inner-derivations are
    two-sided ideals, and where the span of symmetrised squares lands.
    """
    n = d.dim
    basis = bider_basis(d)
    der = derivation_space(d)
    dider = diderivation_space(d)
    inn = inner_derivations(d)
    dinn = inner_diderivations(d)

    ambient = _pair_space(n, subspace_matrices(dider, n), subspace_matrices(der, n))
    ideal_a = _pair_space(n, subspace_matrices(dinn, n), subspace_matrices(der, n))
    ideal_b = _pair_space(n, subspace_matrices(dinn, n), subspace_matrices(inn, n))

    brackets = [[bider_bracket(x, y) for y in basis] for x in basis]
    closed = all(
        ambient.contains(_flatten_pair(b)) for row in brackets for b in row
    )

    def pair_eq(a: BiderElement, b: BiderElement) -> bool:
        return a[0] == b[0] and a[1] == b[1]

    def pair_add(a: BiderElement, b: BiderElement) -> BiderElement:
        return (a[0] + b[0], a[1] + b[1])

    right_ok = True
    left_ok = True
    for x in basis:
        for y in basis:
            for z in basis:
                xy_z = bider_bracket(bider_bracket(x, y), z)
                xz_y = bider_bracket(bider_bracket(x, z), y)
                x_yz = bider_bracket(x, bider_bracket(y, z))
                y_xz = bider_bracket(y, bider_bracket(x, z))
                if not pair_eq(xy_z, pair_add(xz_y, x_yz)):
                    right_ok = False
                if not pair_eq(x_yz, pair_add(xy_z, y_xz)):
                    left_ok = False

    def is_ideal(space: Subspace, members: Sequence[BiderElement]) -> bool:
        return all(
            space.contains(_flatten_pair(bider_bracket(x, m)))
            and space.contains(_flatten_pair(bider_bracket(m, x)))
            for x in basis
            for m in members
        )

    zero = Matrix.zero(n, n)
    ideal_a_members = [(m, zero) for m in subspace_matrices(dinn, n)]
    ideal_a_members += [(zero, m) for m in subspace_matrices(der, n)]
    ideal_b_members = [(m, zero) for m in subspace_matrices(dinn, n)]
    ideal_b_members += [(zero, m) for m in subspace_matrices(inn, n)]

    squares = []
    for x in basis:
        for y in basis:
            squares.append(
                _flatten_pair(pair_add(bider_bracket(x, y), bider_bracket(y, x)))
            )
    square_span = Subspace(2 * n * n, squares)
    dider_component = _pair_space(n, subspace_matrices(dider, n), [])

    return {
        "bider_dim": ambient.dim,
        "bracket_closed": closed,
        "right_identity": right_ok,
        "left_identity": left_ok,
        "dinn_der_ideal": is_ideal(ideal_a, ideal_a_members),
        "dinn_inn_ideal": is_ideal(ideal_b, ideal_b_members),
        "square_span_dim": square_span.dim,
        "square_span_in_dider_component": square_span.is_subspace_of(dider_component),
    }


# -- actions on the invariant sets ----------------------------------------


def check_invariant_actions(d: Dialgebra) -> dict:
    """How derivations and diderivations move the invariant sets.

    All facts are computed on canonical bases: derivations preserve the
    annihilator and the bar-center, diderivations kill the annihilator,
    and in the unital case the halo is a bar unit plus the annihilator,
    with derivations sending bar units into the annihilator and
    diderivations killing bar units and the bar-center.
    """
    n = d.dim
    ann = annihilator(d)
    zb = bar_center(d)
    h = halo(d)
    der_mats = subspace_matrices(derivation_space(d), n)
    dider_mats = subspace_matrices(diderivation_space(d), n)

    def maps_into(mats: Sequence[Matrix], space: Subspace, target: Subspace) -> bool:
        return all(target.contains(t.apply(b)) for t in mats for b in space.basis)

    def kills(mats: Sequence[Matrix], space: Subspace) -> bool:
        zero = zero_vector(n)
        return all(t.apply(b) == zero for t in mats for b in space.basis)

    report = {
        "ann_dim": ann.dim,
        "bar_center_dim": zb.dim,
        "unital": not h.is_empty,
        "ann_in_bar_center": ann.is_subspace_of(zb),
        "der_preserves_ann": maps_into(der_mats, ann, ann),
        "der_preserves_bar_center": maps_into(der_mats, zb, zb),
        "dider_kills_ann": kills(dider_mats, ann),
    }
    if not h.is_empty:
        point = h.point
        report["halo_direction_is_bar_center"] = h.direction == zb
        report["ann_equals_bar_center"] = ann == zb
        report["halo_is_point_plus_ann"] = h == AffineSubspace(point, ann)
        report["der_sends_unit_into_ann"] = all(
            ann.contains(t.apply(point)) for t in der_mats
        )
        report["dider_kills_unit"] = all(
            t.apply(point) == zero_vector(n) for t in dider_mats
        )
        report["dider_kills_bar_center"] = kills(dider_mats, zb)
    return report
