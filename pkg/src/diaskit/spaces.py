"""Derivation and diderivation spaces of a dialgebra.

A derivation obeys the Leibniz rule ``T(a*b) = T(a)*b + a*T(b)`` for
both products.  A diderivation twists the rule so the two products feed
it from opposite sides:

    delta(a * b) = delta(a) dashv b + a vdash delta(b)     (both products)

Both conditions are linear in the matrix of the map, so each space is
the kernel of an explicit constraint system over the rationals.  The
primary solvers below build that system straight from the defining
identity on basis pairs.  A second, independent route phrases the same
conditions as commutator identities between multiplication operators;
agreement of the two routes is part of the verification surface, so the
operator route never reuses the defining-identity rows.

Operators are stored column-style: column ``j`` of the matrix of ``T``
holds the coordinates of ``T(e_j)``.  Flattening is row-major, matching
``Matrix.flatten``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .core import Dialgebra
from .ratlin import Matrix, Subspace, commutator, nullspace, unit_vector


def operator_subspace(n: int, matrices: Sequence[Matrix]) -> Subspace:
    """Span of n-by-n matrices inside Q^(n*n), row-major flattening."""
    for m in matrices:
        if m.shape != (n, n):
            raise ValueError("operator has wrong shape")
    return Subspace(n * n, [m.flatten() for m in matrices])


def subspace_matrices(space: Subspace, n: int) -> list[Matrix]:
    """Canonical basis of an operator subspace, as matrices."""
    if space.ambient_dim != n * n:
        raise ValueError("subspace is not a space of n-by-n operators")
    return [Matrix.from_flat(b, n, n) for b in space.basis]


# -- defining-identity solvers ------------------------------------------


def _rule_kernel(d: Dialgebra, twisted: bool) -> Subspace:
    """Kernel of the Leibniz-rule system.

    ``twisted=False`` solves the derivation rule, where each product
    appears on both sides.  ``twisted=True`` solves the diderivation
    rule, where the first summand always multiplies with dashv and the
    second with vdash.  Unknown T[a][b] sits at flat index a*n + b.
    """
    n = d.dim
    rows: list[list[Fraction]] = []
    for product in ("dashv", "vdash"):
        c = d.c_dashv if product == "dashv" else d.c_vdash
        c_first = d.c_dashv if twisted else c
        c_second = d.c_vdash if twisted else c
        for i in range(n):
            for j in range(n):
                cij = c[i][j]
                for r in range(n):
                    row = [Fraction(0)] * (n * n)
                    for l in range(n):
                        if cij[l]:
                            row[r * n + l] += cij[l]
                    for k in range(n):
                        a = c_first[k][j][r]
                        if a:
                            row[k * n + i] -= a
                        b = c_second[i][k][r]
                        if b:
                            row[k * n + j] -= b
                    rows.append(row)
    return Subspace(n * n, nullspace(Matrix(rows, ncols=n * n)))


def derivation_space(d: Dialgebra) -> Subspace:
    """All derivations, as a subspace of Q^(n*n)."""
    return _rule_kernel(d, twisted=False)


def diderivation_space(d: Dialgebra) -> Subspace:
    """All diderivations, as a subspace of Q^(n*n)."""
    return _rule_kernel(d, twisted=True)


# -- inner operators ----------------------------------------------------


def inner_derivation(d: Dialgebra, a: Sequence) -> Matrix:
    """ad_a = (x -> x dashv a - a vdash x), always a derivation."""
    return d.right_op("dashv", a) - d.left_op("vdash", a)


def inner_diderivation(d: Dialgebra, a: Sequence) -> Matrix:
    """Ad_a = (x -> x vdash a - a dashv x), always a diderivation."""
    return d.right_op("vdash", a) - d.left_op("dashv", a)


def inner_derivations(d: Dialgebra) -> Subspace:
    n = d.dim
    return operator_subspace(
        n, [inner_derivation(d, unit_vector(n, i)) for i in range(n)]
    )


def inner_diderivations(d: Dialgebra) -> Subspace:
    n = d.dim
    return operator_subspace(
        n, [inner_diderivation(d, unit_vector(n, i)) for i in range(n)]
    )


# -- operator-commutator route ------------------------------------------


def _operator_route_kernel(
    d: Dialgebra,
    conditions: Sequence[tuple[Callable[[int], Matrix], Callable[[int], Matrix]]],
) -> Subspace:
    """Kernel of stacked conditions ``S_{T(e_i)} = [T, M_{e_i}]`` for all i.

    Each condition is a pair of maps ``(subscript_op, commutator_op)``
    sending a basis index to an operator matrix: ``subscript_op(k)`` is
    the operator attached to ``e_k`` on the left side, extended linearly
    to ``T(e_i)``, and ``commutator_op(i)`` sits inside the commutator.
    """
    n = d.dim
    rows: list[list[Fraction]] = []
    for subscript_op, commutator_op in conditions:
        subs = [subscript_op(k) for k in range(n)]
        comms = [commutator_op(i) for i in range(n)]
        for i in range(n):
            m = comms[i]
            for r in range(n):
                for s in range(n):
                    row = [Fraction(0)] * (n * n)
                    for k in range(n):
                        v = subs[k].rows[r][s]
                        if v:
                            row[k * n + i] += v
                    for t in range(n):
                        v = m.rows[t][s]
                        if v:
                            row[r * n + t] -= v
                        w = m.rows[r][t]
                        if w:
                            row[t * n + s] += w
                    rows.append(row)
    return Subspace(n * n, nullspace(Matrix(rows, ncols=n * n)))


def _basis_op(d: Dialgebra, side: str, product: str) -> Callable[[int], Matrix]:
    n = d.dim
    op = d.left_op if side == "left" else d.right_op
    return lambda k: op(product, unit_vector(n, k))


def derivation_space_via_left_ops(d: Dialgebra) -> Subspace:
    """Derivations characterised by ``L_{T(a)} = [T, L_a]`` per product."""
    return _operator_route_kernel(
        d,
        [
            (_basis_op(d, "left", "dashv"), _basis_op(d, "left", "dashv")),
            (_basis_op(d, "left", "vdash"), _basis_op(d, "left", "vdash")),
        ],
    )


def derivation_space_via_right_ops(d: Dialgebra) -> Subspace:
    """Derivations characterised by ``R_{T(a)} = [T, R_a]`` per product."""
    return _operator_route_kernel(
        d,
        [
            (_basis_op(d, "right", "dashv"), _basis_op(d, "right", "dashv")),
            (_basis_op(d, "right", "vdash"), _basis_op(d, "right", "vdash")),
        ],
    )


def diderivation_space_via_ops(d: Dialgebra) -> Subspace:
    """Diderivations characterised by the mixed commutator pair.

    ``L^dashv_{delta(a)} = [delta, L^vdash_a]`` encodes the vdash rule
    and ``R^vdash_{delta(a)} = [delta, R^dashv_a]`` the dashv rule;
    stacking both recovers the full diderivation condition.
    """
    return _operator_route_kernel(
        d,
        [
            (_basis_op(d, "left", "dashv"), _basis_op(d, "left", "vdash")),
            (_basis_op(d, "right", "vdash"), _basis_op(d, "right", "dashv")),
        ],
    )


def check_characterizations(d: Dialgebra) -> dict:
    """Compare the defining-identity kernels with the operator kernels."""
    der = derivation_space(d)
    der_left = derivation_space_via_left_ops(d)
    der_right = derivation_space_via_right_ops(d)
    dider = diderivation_space(d)
    dider_ops = diderivation_space_via_ops(d)
    return {
        "derivations": {
            "dim": der.dim,
            "left_route_dim": der_left.dim,
            "right_route_dim": der_right.dim,
            "left_route_equal": der == der_left,
            "right_route_equal": der == der_right,
        },
        "diderivations": {
            "dim": dider.dim,
            "operator_route_dim": dider_ops.dim,
            "operator_route_equal": dider == dider_ops,
        },
    }


# -- closure reports ----------------------------------------------------


def _bracket_into(
    n: int, left: Subspace, right: Subspace, target: Subspace
) -> bool:
    lmats = subspace_matrices(left, n)
    rmats = subspace_matrices(right, n)
    return all(
        target.contains(commutator(a, b).flatten()) for a in lmats for b in rmats
    )


def check_closures(d: Dialgebra) -> dict:
    """Lie-theoretic closure facts about Der, Dider and their inner parts.

    Every entry is computed, not assumed: containments are checked on
    canonical bases, and the two ideal identities are verified as exact
    matrix equations.
    """
    n = d.dim
    der = derivation_space(d)
    dider = diderivation_space(d)
    inn = inner_derivations(d)
    dinn = inner_diderivations(d)
    basis = [unit_vector(n, i) for i in range(n)]
    der_mats = subspace_matrices(der, n)

    inner_identity = all(
        commutator(t, inner_derivation(d, a)) == inner_derivation(d, t.apply(a))
        for t in der_mats
        for a in basis
    )
    inner_di_identity = all(
        commutator(t, inner_diderivation(d, a)) == inner_diderivation(d, t.apply(a))
        for t in der_mats
        for a in basis
    )

    report = {
        "der_dim": der.dim,
        "dider_dim": dider.dim,
        "inn_dim": inn.dim,
        "dinn_dim": dinn.dim,
        "inn_in_der": inn.is_subspace_of(der),
        "dinn_in_dider": dinn.is_subspace_of(dider),
        "der_bracket_closed": _bracket_into(n, der, der, der),
        "dider_der_bracket_in_dider": _bracket_into(n, dider, der, dider),
        "dinn_der_bracket_in_dinn": _bracket_into(n, dinn, der, dinn),
        "inn_der_bracket_in_inn": _bracket_into(n, inn, der, inn),
        "inner_ideal_identity": inner_identity,
        "inner_di_ideal_identity": inner_di_identity,
    }
    if d.products_coincide():
        report["associative_dider_equals_der"] = dider == der
        report["associative_dinn_equals_inn"] = dinn == inn
    return report
