"""Dense linear algebra over the rationals.

Everything here is exact.  Matrices are small (a few thousand rows at
worst, from structure-constant systems), so plain Gaussian elimination
on :class:`fractions.Fraction` entries is fast enough and keeps results
free of rounding questions.

Vectors are tuples of ``Fraction``; matrices are row-major lists of
rows.  Subspaces are stored through the reduced row echelon form of a
spanning set, which makes equality a data comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, str, Fraction]
Vector = tuple[Fraction, ...]


def frac(x: Scalar) -> Fraction:
    """Coerce ints, strings like '2/3', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vector(entries: Iterable[Scalar]) -> Vector:
    return tuple(frac(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    """Standard basis vector e_i, 0-indexed."""
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale_vector(c: Scalar, v: Sequence[Fraction]) -> Vector:
    c = frac(c)
    return tuple(c * a for a in v)


class Matrix:
    """Immutable-by-convention rational matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence[Scalar]], ncols: int | None = None):
        data = [[frac(x) for x in row] for row in rows]
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
            self.ncols = width
        else:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            self.ncols = ncols
        self.rows = data
        self.nrows = len(data)

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @staticmethod
    def from_columns(cols: Sequence[Sequence[Scalar]]) -> "Matrix":
        if not cols:
            raise ValueError("need at least one column")
        n = len(cols[0])
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    # -- basic queries ------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> Vector:
        return tuple(self.rows[i])

    def column(self, j: int) -> Vector:
        return tuple(self.rows[i][j] for i in range(self.nrows))

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def flatten(self) -> Vector:
        """Row-major flattening, the convention used by the kernel solvers."""
        return tuple(x for row in self.rows for x in row)

    @staticmethod
    def from_flat(entries: Sequence[Scalar], nrows: int, ncols: int) -> "Matrix":
        if len(entries) != nrows * ncols:
            raise ValueError("wrong number of entries")
        return Matrix(
            [entries[i * ncols : (i + 1) * ncols] for i in range(nrows)], ncols=ncols
        )

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
            ncols=self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
            ncols=self.ncols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows], ncols=self.ncols)

    def scale(self, c: Scalar) -> "Matrix":
        c = frac(c)
        return Matrix([[c * a for a in row] for row in self.rows], ncols=self.ncols)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimension mismatch")
        out = []
        for i in range(self.nrows):
            left = self.rows[i]
            row = []
            for j in range(other.ncols):
                s = Fraction(0)
                for k in range(self.ncols):
                    a = left[k]
                    if a:
                        s += a * other.rows[k][j]
                row.append(s)
            out.append(row)
        return Matrix(out, ncols=other.ncols)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix acting on a coordinate column."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((row[k] * v[k] for k in range(self.ncols)), Fraction(0))
            for row in self.rows
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    # -- comparisons --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, tuple(tuple(r) for r in self.rows)))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self.rows
        )
        return f"Matrix[{self.nrows}x{self.ncols}: {body}]"


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """[a, b] = ab - ba."""
    return a * b - b * a


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(rows, ncols=ncols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of the right kernel {x : m x = 0}.

    Each basis vector has a 1 in one free coordinate and 0 in the
    others, so the answer is canonical for a given matrix.
    """
    reduced, pivots = rref(m)
    ncols = m.ncols
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced.rows[r][f]
        basis.append(tuple(v))
    return basis


def det(m: Matrix) -> Fraction:
    """Determinant by Gaussian elimination with exact arithmetic."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    rows = [list(r) for r in m.rows]
    result = Fraction(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            result = -result
        pivot = rows[c][c]
        result *= pivot
        inv = 1 / pivot
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def solve_affine(a: Matrix, b: Sequence[Fraction]) -> tuple[Vector, list[Vector]] | None:
    """Solve a x = b exactly.

    Returns ``None`` when inconsistent, else ``(particular, kernel_basis)``
    describing the full solution set ``particular + span(kernel_basis)``.
    """
    if len(b) != a.nrows:
        raise ValueError("right-hand side length mismatch")
    augmented = Matrix(
        [list(row) + [b[i]] for i, row in enumerate(a.rows)], ncols=a.ncols + 1
    )
    reduced, pivots = rref(augmented)
    if a.ncols in pivots:
        return None
    particular = [Fraction(0)] * a.ncols
    for r, c in enumerate(pivots):
        particular[c] = reduced.rows[r][a.ncols]
    return tuple(particular), nullspace(a)


class Subspace:
    """A linear subspace of Q^n in canonical (RREF) form."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, spanning: Iterable[Sequence[Scalar]] = ()):
        vectors = [vector(v) for v in spanning]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector does not live in the ambient space")
        self.ambient_dim = ambient_dim
        if vectors:
            reduced, pivots = rref(Matrix(vectors, ncols=ambient_dim))
            self.basis = tuple(reduced.row(i) for i in range(len(pivots)))
        else:
            self.basis = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Scalar]) -> bool:
        w = list(vector(v))
        if len(w) != self.ambient_dim:
            raise ValueError("vector does not live in the ambient space")
        for b in self.basis:
            lead = next(j for j, x in enumerate(b) if x != 0)
            if w[lead] != 0:
                c = w[lead]
                w = [x - c * y for x, y in zip(w, b)]
        return all(x == 0 for x in w)

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Kernel-based intersection; used by closure checks."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        if not self.basis or not other.basis:
            return Subspace(self.ambient_dim)
        # Columns are the two bases side by side; a kernel vector gives
        # coefficients of one combination lying in both spans.
        cols = [list(b) for b in self.basis] + [list(b) for b in other.basis]
        kernel = nullspace(Matrix.from_columns(cols))
        k = len(self.basis)
        vectors = []
        for coeffs in kernel:
            v = zero_vector(self.ambient_dim)
            for c, b in zip(coeffs[:k], self.basis):
                v = add_vectors(v, scale_vector(c, b))
            vectors.append(v)
        return Subspace(self.ambient_dim, vectors)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in b) for b in self.basis)
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim}: {rows})"


class AffineSubspace:
    """A coset ``point + direction`` of a subspace, possibly empty."""

    __slots__ = ("point", "direction")

    def __init__(self, point: Vector | None, direction: Subspace):
        if point is not None and len(point) != direction.ambient_dim:
            raise ValueError("point does not live in the ambient space")
        self.point = point
        self.direction = direction

    @property
    def is_empty(self) -> bool:
        return self.point is None

    def contains(self, v: Sequence[Scalar]) -> bool:
        if self.point is None:
            return False
        return self.direction.contains(sub_vectors(vector(v), self.point))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineSubspace):
            return NotImplemented
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        return self.direction == other.direction and other.contains(self.point)

    def __repr__(self) -> str:
        if self.point is None:
            return "AffineSubspace(empty)"
        pt = " ".join(str(x) for x in self.point)
        return f"AffineSubspace({pt} + {self.direction!r})"
