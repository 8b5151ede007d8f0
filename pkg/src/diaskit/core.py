"""Structure-constant dialgebras and their text format.

A dialgebra here is a finite-dimensional rational vector space with two
bilinear products, ``vdash`` and ``dashv``.  Five axioms make the pair
diassociative: each product is associative, and three mixed identities
let the products absorb each other:

    assoc_dashv   (x dashv y) dashv z == x dashv (y dashv z)
    absorb_dashv   x dashv (y dashv z) == x dashv (y vdash z)
    inner         (x vdash y) dashv z == x vdash (y dashv z)
    absorb_vdash  (x dashv y) vdash z == (x vdash y) vdash z
    assoc_vdash   (x vdash y) vdash z == x vdash (y vdash z)

Structure constants are stored per product as ``c[i][j][k]``, the
coefficient of basis vector ``k`` in ``e_i * e_j`` (0-based internally;
the text format is 1-based).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .ratlin import Matrix, Scalar, Vector, frac, unit_vector, vector, zero_vector

PRODUCTS = ("dashv", "vdash")

AXIOM_NAMES = (
    "assoc_dashv",
    "absorb_dashv",
    "inner",
    "absorb_vdash",
    "assoc_vdash",
)

MAX_DIM = 64


class DialgebraError(ValueError):
    """Raised for malformed structure data or unparseable files."""


Cube = list[list[list[Fraction]]]


def _zero_cube(n: int) -> Cube:
    return [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]


class Dialgebra:
    """A finite-dimensional dialgebra given by structure constants."""

    __slots__ = ("dim", "c_vdash", "c_dashv")

    def __init__(
        self,
        dim: int,
        c_vdash: Sequence[Sequence[Sequence[Scalar]]],
        c_dashv: Sequence[Sequence[Sequence[Scalar]]],
    ):
        if not 1 <= dim <= MAX_DIM:
            raise DialgebraError(f"dimension {dim} outside supported range 1..{MAX_DIM}")
        self.dim = dim
        self.c_vdash = self._check_cube(c_vdash, "vdash")
        self.c_dashv = self._check_cube(c_dashv, "dashv")

    def _check_cube(self, cube: Sequence, name: str) -> Cube:
        n = self.dim
        if len(cube) != n:
            raise DialgebraError(f"{name} table has {len(cube)} rows, expected {n}")
        out: Cube = []
        for i, plane in enumerate(cube):
            if len(plane) != n:
                raise DialgebraError(f"{name} table row {i} has wrong length")
            rows = []
            for j, entries in enumerate(plane):
                if len(entries) != n:
                    raise DialgebraError(f"{name} table entry ({i},{j}) has wrong length")
                rows.append([frac(x) for x in entries])
            out.append(rows)
        return out

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_relations(
        dim: int,
        relations: Mapping[tuple[str, int, int], Sequence[tuple[int, Scalar]]],
    ) -> "Dialgebra":
        """Build from sparse relations ``(product, i, j) -> [(k, coeff), ...]``.

        Indices are 1-based to match the text format and printed tables.
        Unlisted products are zero.
        """
        c = {"vdash": _zero_cube(dim), "dashv": _zero_cube(dim)}
        for (product, i, j), terms in relations.items():
            if product not in PRODUCTS:
                raise DialgebraError(f"unknown product {product!r}")
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DialgebraError(f"index out of range in relation ({product},{i},{j})")
            for k, coeff in terms:
                if not 1 <= k <= dim:
                    raise DialgebraError(f"index out of range in relation ({product},{i},{j})")
                c[product][i - 1][j - 1][k - 1] += frac(coeff)
        return Dialgebra(dim, c["vdash"], c["dashv"])

    @staticmethod
    def zero(dim: int) -> "Dialgebra":
        return Dialgebra(dim, _zero_cube(dim), _zero_cube(dim))

    # -- products -----------------------------------------------------

    def _cube(self, product: str) -> Cube:
        if product == "vdash":
            return self.c_vdash
        if product == "dashv":
            return self.c_dashv
        raise DialgebraError(f"unknown product {product!r}")

    def multiply(self, product: str, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        """Bilinear extension of the chosen product to coordinate vectors."""
        n = self.dim
        xv, yv = vector(x), vector(y)
        if len(xv) != n or len(yv) != n:
            raise DialgebraError("vector length does not match the dimension")
        c = self._cube(product)
        out = [Fraction(0)] * n
        for i, xi in enumerate(xv):
            if not xi:
                continue
            for j, yj in enumerate(yv):
                if not yj:
                    continue
                cij = c[i][j]
                coeff = xi * yj
                for k in range(n):
                    if cij[k]:
                        out[k] += coeff * cij[k]
        return tuple(out)

    def vdash(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        return self.multiply("vdash", x, y)

    def dashv(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        return self.multiply("dashv", x, y)

    def basis_product(self, product: str, i: int, j: int) -> Vector:
        """e_i * e_j, 0-based indices."""
        return tuple(self._cube(product)[i][j])

    # -- multiplication operators --------------------------------------

    def left_op(self, product: str, a: Sequence[Scalar]) -> Matrix:
        """Matrix of x -> a * x; column j holds the coordinates of a * e_j."""
        n = self.dim
        cols = [self.multiply(product, a, unit_vector(n, j)) for j in range(n)]
        return Matrix.from_columns(cols)

    def right_op(self, product: str, a: Sequence[Scalar]) -> Matrix:
        """Matrix of x -> x * a; column j holds the coordinates of e_j * a."""
        n = self.dim
        cols = [self.multiply(product, unit_vector(n, j), a) for j in range(n)]
        return Matrix.from_columns(cols)

    # -- structural checks ----------------------------------------------

    def verify_axioms(self) -> list[dict]:
        """Check all five axioms on every basis triple.

        Returns a list of violation records; an empty list means the
        structure constants define a dialgebra.  Each record carries the
        axiom name, the offending basis triple (0-based), and both sides.
        """
        n = self.dim
        violations = []
        basis = [unit_vector(n, i) for i in range(n)]

        def check(name: str, i: int, j: int, k: int, lhs: Vector, rhs: Vector) -> None:
            if lhs != rhs:
                violations.append(
                    {"axiom": name, "triple": (i, j, k), "lhs": lhs, "rhs": rhs}
                )

        for i in range(n):
            for j in range(n):
                ij_d = self.dashv(basis[i], basis[j])
                ij_v = self.vdash(basis[i], basis[j])
                for k in range(n):
                    jk_d = self.dashv(basis[j], basis[k])
                    jk_v = self.vdash(basis[j], basis[k])
                    check(
                        "assoc_dashv", i, j, k,
                        self.dashv(ij_d, basis[k]), self.dashv(basis[i], jk_d),
                    )
                    check(
                        "absorb_dashv", i, j, k,
                        self.dashv(basis[i], jk_d), self.dashv(basis[i], jk_v),
                    )
                    check(
                        "inner", i, j, k,
                        self.dashv(ij_v, basis[k]), self.vdash(basis[i], jk_d),
                    )
                    check(
                        "absorb_vdash", i, j, k,
                        self.vdash(ij_d, basis[k]), self.vdash(ij_v, basis[k]),
                    )
                    check(
                        "assoc_vdash", i, j, k,
                        self.vdash(ij_v, basis[k]), self.vdash(basis[i], jk_v),
                    )
        return violations

    def is_dialgebra(self) -> bool:
        return not self.verify_axioms()

    def products_coincide(self) -> bool:
        """True when vdash and dashv agree, i.e. the algebra is associative."""
        return self.c_vdash == self.c_dashv

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dialgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.c_vdash == other.c_vdash
            and self.c_dashv == other.c_dashv
        )

    def __hash__(self) -> int:
        flat = tuple(
            x
            for cube in (self.c_vdash, self.c_dashv)
            for plane in cube
            for row in plane
            for x in row
        )
        return hash((self.dim, flat))

    def relations(self) -> dict[tuple[str, int, int], list[tuple[int, Fraction]]]:
        """Sparse view of the nonzero structure constants, 1-based."""
        out: dict[tuple[str, int, int], list[tuple[int, Fraction]]] = {}
        for product in PRODUCTS:
            c = self._cube(product)
            for i in range(self.dim):
                for j in range(self.dim):
                    terms = [(k + 1, c[i][j][k]) for k in range(self.dim) if c[i][j][k]]
                    if terms:
                        out[(product, i + 1, j + 1)] = terms
        return out

    def __repr__(self) -> str:
        rels = self.relations()
        body = ", ".join(
            f"e{i} {'|-' if p == 'vdash' else '-|'} e{j} = "
            + "+".join(f"{c}*e{k}" if c != 1 else f"e{k}" for k, c in terms)
            for (p, i, j), terms in sorted(rels.items())
        )
        return f"Dialgebra(dim {self.dim}: {body or '0'})"


def phi_dialgebra(phi: Sequence[Scalar]) -> Dialgebra:
    """Dialgebra attached to a nonzero linear functional on Q^n.

    With ``phi = (phi_1, ..., phi_n)`` the products are
    ``e_i vdash e_j = phi_i e_j`` and ``e_i dashv e_j = phi_j e_i``:
    the functional weighs the absorbed factor.  The zero functional is
    rejected because it gives the zero algebra, which is excluded here
    to keep the family's invariants nontrivial.
    """
    weights = vector(phi)
    if all(w == 0 for w in weights):
        raise DialgebraError("phi must be a nonzero functional")
    n = len(weights)
    c_vdash = _zero_cube(n)
    c_dashv = _zero_cube(n)
    for i in range(n):
        for j in range(n):
            c_vdash[i][j][j] += weights[i]
            c_dashv[i][j][i] += weights[j]
    return Dialgebra(n, c_vdash, c_dashv)


# -- text format --------------------------------------------------------
#
#   dialgebra v1
#   dim 3
#   # optional comments
#   vdash 1 2 -> 1:1, 3:-2/3
#
# Indices are 1-based.  Each line gives one basis product as a list of
# `k:coefficient` terms.  A (product, i, j, k) pair may appear only once
# in the whole file.


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def serialize_dialgebra(d: Dialgebra) -> str:
    """Canonical text form: sorted relations, coefficients in lowest terms."""
    lines = ["dialgebra v1", f"dim {d.dim}"]
    rels = d.relations()
    for (product, i, j) in sorted(rels):
        terms = ", ".join(f"{k}:{_format_coeff(c)}" for k, c in sorted(rels[(product, i, j)]))
        lines.append(f"{product} {i} {j} -> {terms}")
    return "\n".join(lines) + "\n"


def parse_dialgebra(text: str) -> Dialgebra:
    """Parse the text format, validating indices and duplicates.

    Raises :class:`DialgebraError` with a 1-based line number on any
    syntax problem, out-of-range index, or repeated (product, i, j, k).
    """
    meaningful: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            meaningful.append((lineno, line))

    if not meaningful:
        raise DialgebraError("line 1: empty file, expected 'dialgebra v1' header")

    lineno, header = meaningful[0]
    if header != "dialgebra v1":
        raise DialgebraError(f"line {lineno}: expected 'dialgebra v1' header, got {header!r}")

    if len(meaningful) < 2:
        raise DialgebraError(f"line {lineno}: missing 'dim <n>' line")
    lineno, dim_line = meaningful[1]
    parts = dim_line.split()
    if len(parts) != 2 or parts[0] != "dim":
        raise DialgebraError(f"line {lineno}: expected 'dim <n>', got {dim_line!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise DialgebraError(f"line {lineno}: dimension {parts[1]!r} is not an integer") from None
    if not 1 <= n <= MAX_DIM:
        raise DialgebraError(f"line {lineno}: dimension {n} outside supported range 1..{MAX_DIM}")

    c = {"vdash": _zero_cube(n), "dashv": _zero_cube(n)}
    seen: set[tuple[str, int, int, int]] = set()

    for lineno, line in meaningful[2:]:
        if "->" not in line:
            raise DialgebraError(f"line {lineno}: missing '->' in entry {line!r}")
        head, _, tail = line.partition("->")
        head_parts = head.split()
        if len(head_parts) != 3:
            raise DialgebraError(f"line {lineno}: expected '<product> <i> <j> ->', got {head!r}")
        product = head_parts[0]
        if product not in PRODUCTS:
            raise DialgebraError(
                f"line {lineno}: unknown product {product!r}, expected 'vdash' or 'dashv'"
            )
        try:
            i, j = int(head_parts[1]), int(head_parts[2])
        except ValueError:
            raise DialgebraError(f"line {lineno}: indices must be integers in {head!r}") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise DialgebraError(f"line {lineno}: index out of range 1..{n} in {head!r}")

        if not tail.strip():
            raise DialgebraError(f"line {lineno}: empty term list after '->'")
        for term in tail.split(","):
            term = term.strip()
            if ":" not in term:
                raise DialgebraError(f"line {lineno}: expected '<k>:<coeff>', got {term!r}")
            k_text, _, coeff_text = term.partition(":")
            try:
                k = int(k_text.strip())
            except ValueError:
                raise DialgebraError(
                    f"line {lineno}: target index {k_text.strip()!r} is not an integer"
                ) from None
            if not 1 <= k <= n:
                raise DialgebraError(f"line {lineno}: index out of range 1..{n} in {term!r}")
            try:
                coeff = Fraction(coeff_text.strip())
            except (ValueError, ZeroDivisionError):
                raise DialgebraError(
                    f"line {lineno}: bad coefficient {coeff_text.strip()!r}"
                ) from None
            key = (product, i, j, k)
            if key in seen:
                raise DialgebraError(
                    f"line {lineno}: duplicate entry for {product} {i} {j} -> {k}"
                )
            seen.add(key)
            c[product][i - 1][j - 1][k - 1] = coeff

    return Dialgebra(n, c["vdash"], c["dashv"])
