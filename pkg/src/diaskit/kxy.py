"""Truncated model of the bivariate polynomial dialgebra.

On K[x,y] the two products are

    f -| g = f(x,y) * g(y,y)        f |- g = f(x,x) * g(x,y)

which make K[x,y] a dialgebra with bar unit 1.  The ring is infinite
dimensional, so this module works under an ambient total-degree bound:
every operation is exact, and a result that would leave the bound raises
``DegreeBoundError`` instead of truncating.  On top of the products it
implements the structure invariants (annihilator and halo membership) and
the closed operator formulas: the derivation form

    d(x^m y^n) = m x^(m-1) y^n f(x) + x^m y^n (x-y) g(x,y)
                 + n x^m y^(n-1) f(y)        (univariate f)

the two-generator diderivation form built from geometric sums, and the
inner diderivation h |-> p * (h(x,x) - h(y,y)).  Geometric sums are always
assembled term by term, never via division by (x-y); the one place a
division appears (the annihilator divisibility oracle) is an independent
synthetic-division cross-check, not a computational shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .ratlin import Scalar, frac

DEFAULT_BOUND = 8

Exponents = tuple[int, int]


class DegreeBoundError(ValueError):
    """A result would exceed the ambient total-degree bound."""


class PolyParseError(ValueError):
    pass


class BivariatePoly:
    """Sparse exact polynomial in x and y under a total-degree bound.

    Coefficients map (deg_x, deg_y) to nonzero rationals.  The bound is a
    modeling device, not a quotient: arithmetic whose exact result has a
    term beyond the bound fails loudly.
    """

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs: Mapping[Exponents, Scalar] | None = None,
                 bound: int = DEFAULT_BOUND):
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        clean: dict[Exponents, Fraction] = {}
        for (a, b), c in (coeffs or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent pair {(a, b)}")
            value = frac(c)
            if value == 0:
                continue
            if a + b > bound:
                raise DegreeBoundError(
                    f"degree bound exceeded: x^{a}*y^{b} with bound {bound}")
            clean[(a, b)] = value
        self.coeffs = clean
        self.bound = bound

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(bound: int = DEFAULT_BOUND) -> "BivariatePoly":
        return BivariatePoly({}, bound)

    @staticmethod
    def one(bound: int = DEFAULT_BOUND) -> "BivariatePoly":
        return BivariatePoly({(0, 0): 1}, bound)

    @staticmethod
    def monomial(a: int, b: int, c: Scalar = 1,
                 bound: int = DEFAULT_BOUND) -> "BivariatePoly":
        return BivariatePoly({(a, b): c}, bound)

    @staticmethod
    def var_x(bound: int = DEFAULT_BOUND) -> "BivariatePoly":
        return BivariatePoly({(1, 0): 1}, bound)

    @staticmethod
    def var_y(bound: int = DEFAULT_BOUND) -> "BivariatePoly":
        return BivariatePoly({(0, 1): 1}, bound)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def total_degree(self) -> int:
        """Total degree, with the usual convention -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(a + b for a, b in self.coeffs)

    def is_univariate_x(self) -> bool:
        return all(b == 0 for _a, b in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    # -- arithmetic -------------------------------------------------------

    def _merge_bound(self, other: "BivariatePoly") -> int:
        return min(self.bound, other.bound)

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key, Fraction(0)) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return BivariatePoly(out, self._merge_bound(other))

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return self + other.scale(-1)

    def __neg__(self) -> "BivariatePoly":
        return self.scale(-1)

    def scale(self, c: Scalar) -> "BivariatePoly":
        c = frac(c)
        return BivariatePoly({k: c * v for k, v in self.coeffs.items()},
                             self.bound)

    def __mul__(self, other: "BivariatePoly") -> "BivariatePoly":
        bound = self._merge_bound(other)
        out: dict[Exponents, Fraction] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                key = (a1 + a2, b1 + b2)
                if key[0] + key[1] > bound:
                    raise DegreeBoundError(
                        f"degree bound exceeded: product term x^{key[0]}*"
                        f"y^{key[1]} with bound {bound}")
                s = out.get(key, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return BivariatePoly(out, bound)

    # -- substitutions ------------------------------------------------------

    def subs_xx(self) -> "BivariatePoly":
        """h(x,x): collapse both variables onto x."""
        out: dict[Exponents, Fraction] = {}
        for (a, b), c in self.coeffs.items():
            key = (a + b, 0)
            s = out.get(key, Fraction(0)) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return BivariatePoly(out, self.bound)

    def subs_yy(self) -> "BivariatePoly":
        """h(y,y): collapse both variables onto y."""
        out: dict[Exponents, Fraction] = {}
        for (a, b), c in self.coeffs.items():
            key = (0, a + b)
            s = out.get(key, Fraction(0)) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return BivariatePoly(out, self.bound)

    def swap_vars(self) -> "BivariatePoly":
        """h(y,x)."""
        return BivariatePoly({(b, a): c for (a, b), c in self.coeffs.items()},
                             self.bound)

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BivariatePoly({format_poly(self)!r}, bound={self.bound})"


# ---------------------------------------------------------------------------
# Dialgebra products


def dashv(f: BivariatePoly, g: BivariatePoly) -> BivariatePoly:
    """f -| g = f(x,y) * g(y,y)."""
    return f * g.subs_yy()


def vdash(f: BivariatePoly, g: BivariatePoly) -> BivariatePoly:
    """f |- g = f(x,x) * g(x,y)."""
    return f.subs_xx() * g


def _monomials_up_to(total: int, bound: int) -> list[BivariatePoly]:
    out = []
    for a in range(total + 1):
        for b in range(total + 1 - a):
            out.append(BivariatePoly.monomial(a, b, 1, bound))
    return out


def check_axioms_truncated(bound: int) -> dict:
    """Exhaustively check the five dialgebra axioms on monomial triples.

    Covers every triple of monomials whose degree sum stays within the
    bound; the products only redistribute degrees, so every intermediate
    term of such a triple is representable.
    """
    if bound < 3:
        raise ValueError("bound must be >= 3")
    violations = []
    tried = 0
    monos = [(a, b) for a in range(bound + 1) for b in range(bound + 1 - a)]
    for (a1, b1) in monos:
        for (a2, b2) in monos:
            if a1 + b1 + a2 + b2 > bound:
                continue
            for (a3, b3) in monos:
                if a1 + b1 + a2 + b2 + a3 + b3 > bound:
                    continue
                x = BivariatePoly.monomial(a1, b1, 1, bound)
                y = BivariatePoly.monomial(a2, b2, 1, bound)
                z = BivariatePoly.monomial(a3, b3, 1, bound)
                tried += 1
                checks = (
                    ("assoc_dashv", dashv(dashv(x, y), z), dashv(x, dashv(y, z))),
                    ("absorb_dashv", dashv(x, dashv(y, z)), dashv(x, vdash(y, z))),
                    ("inner", dashv(vdash(x, y), z), vdash(x, dashv(y, z))),
                    ("absorb_vdash", vdash(dashv(x, y), z), vdash(vdash(x, y), z)),
                    ("assoc_vdash", vdash(vdash(x, y), z), vdash(x, vdash(y, z))),
                )
                for label, lhs, rhs in checks:
                    if lhs != rhs:
                        violations.append(
                            {"axiom": label,
                             "triple": ((a1, b1), (a2, b2), (a3, b3))})
    return {"bound": bound, "triples": tried, "violations": violations}


# ---------------------------------------------------------------------------
# Annihilator and halo


def ann_membership(h: BivariatePoly) -> bool:
    """True iff h(x,x) = 0 and h(y,y) = 0."""
    return h.subs_xx().is_zero() and h.subs_yy().is_zero()


def divides_x_minus_y(h: BivariatePoly) -> tuple[bool, BivariatePoly | None]:
    """Synthetic division by (x - y): returns (divisible, quotient).

    Treats h as a polynomial in x over K[y] and runs Horner division; this
    is the independent oracle for the annihilator membership property and
    is used nowhere else.
    """
    if h.is_zero():
        return True, BivariatePoly.zero(h.bound)
    deg_x = max(a for a, _b in h.coeffs)
    # coefficient of x^a as a polynomial in y
    by_xdeg: dict[int, dict[int, Fraction]] = {}
    for (a, b), c in h.coeffs.items():
        by_xdeg.setdefault(a, {})[b] = c
    quotient: dict[Exponents, Fraction] = {}
    carry: dict[int, Fraction] = {}
    for a in range(deg_x, 0, -1):
        coeff = dict(by_xdeg.get(a, {}))
        for b, c in carry.items():
            coeff[b] = coeff.get(b, Fraction(0)) + c
        for b, c in coeff.items():
            if c:
                quotient[(a - 1, b)] = c
        # dividing by (x - y) shifts the running coefficient by y
        carry = {b + 1: c for b, c in coeff.items() if c}
    remainder = dict(by_xdeg.get(0, {}))
    for b, c in carry.items():
        remainder[b] = remainder.get(b, Fraction(0)) + c
    if any(c != 0 for c in remainder.values()):
        return False, None
    return True, BivariatePoly(quotient, h.bound)


def halo_membership(h: BivariatePoly) -> bool:
    """True iff h - 1 lies in the annihilator.

    Cross-checked against the defining property: h must act as a bar unit
    on monomials (h |- m = m and m -| h = m for every in-bound monomial m).
    The two routes agree identically; a disagreement would indicate a
    product implementation bug, so it raises instead of returning.
    """
    primary = ann_membership(h - BivariatePoly.one(h.bound))
    direct = True
    room = h.bound - max(h.total_degree(), 0)
    for m in _monomials_up_to(max(room, 0), h.bound):
        if vdash(h, m) != m or dashv(m, h) != m:
            direct = False
            break
    if primary != direct:
        raise AssertionError("halo membership routes disagree")
    return primary


# ---------------------------------------------------------------------------
# Closed operator formulas


@dataclass(frozen=True)
class KxyOperatorSpec:
    """A closed-form operator on the truncated polynomial dialgebra.

    kind:
      * ``derivation``: data (f, g) with f univariate in x
      * ``diderivation``: data (f, g) = images of x and y
      * ``inner_diderivation``: data p
    """

    kind: str
    f: BivariatePoly | None = None
    g: BivariatePoly | None = None
    p: BivariatePoly | None = None

    def __post_init__(self):
        if self.kind == "derivation":
            if self.f is None or self.g is None:
                raise ValueError("derivation spec needs f and g")
            if not self.f.is_univariate_x():
                raise ValueError("derivation spec requires univariate f(x)")
        elif self.kind == "diderivation":
            if self.f is None or self.g is None:
                raise ValueError("diderivation spec needs f and g")
        elif self.kind == "inner_diderivation":
            if self.p is None:
                raise ValueError("inner diderivation spec needs p")
        else:
            raise ValueError(f"unknown operator kind {self.kind!r}")

    def apply_monomial(self, m: int, n: int) -> BivariatePoly:
        if self.kind == "derivation":
            return derivation_apply((self.f, self.g), m, n)
        if self.kind == "diderivation":
            return diderivation_apply((self.f, self.g), m, n)
        bound = self.p.bound
        return inner_dider_apply(self.p, BivariatePoly.monomial(m, n, 1, bound))

    def apply(self, h: BivariatePoly) -> BivariatePoly:
        out = BivariatePoly.zero(h.bound)
        for (a, b), c in sorted(h.coeffs.items()):
            out = out + self.apply_monomial(a, b).scale(c)
        return out


def geometric_sum(m: int, bound: int = DEFAULT_BOUND) -> BivariatePoly:
    """The telescoping quotient (x^m - y^m)/(x - y) as an explicit sum.

    Returns sum over k < m of x^k y^(m-1-k); empty (zero) for m = 0.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return BivariatePoly({(k, m - 1 - k): 1 for k in range(m)}, bound)


def derivation_apply(spec: tuple[BivariatePoly, BivariatePoly], m: int,
                     n: int) -> BivariatePoly:
    """Image of x^m y^n under the closed derivation form for (f, g).

    d(x^m y^n) = m x^(m-1) y^n f(x) + x^m y^n (x-y) g + n x^m y^(n-1) f(y)
    with f univariate in x; f(y) is f with the variable renamed.
    """
    f, g = spec
    if not f.is_univariate_x():
        raise ValueError("derivation spec requires univariate f(x)")
    bound = min(f.bound, g.bound)
    out = BivariatePoly.zero(bound)
    if m > 0:
        out = out + BivariatePoly.monomial(m - 1, n, m, bound) * f
    x_minus_y = BivariatePoly({(1, 0): 1, (0, 1): -1}, bound)
    out = out + BivariatePoly.monomial(m, n, 1, bound) * (x_minus_y * g)
    if n > 0:
        out = out + BivariatePoly.monomial(m, n - 1, n, bound) * f.swap_vars()
    return out


def diderivation_apply(spec: tuple[BivariatePoly, BivariatePoly], m: int,
                       n: int) -> BivariatePoly:
    """Image of x^m y^n under the two-generator diderivation form.

    delta(x^m y^n) = f * y^n * S_m + g * x^m * S_n where S_m is the
    geometric sum with m terms, f = delta(x) and g = delta(y).
    """
    f, g = spec
    bound = min(f.bound, g.bound)
    out = BivariatePoly.zero(bound)
    if m > 0:
        out = out + f * BivariatePoly.monomial(0, n, 1, bound) * \
            geometric_sum(m, bound)
    if n > 0:
        out = out + g * BivariatePoly.monomial(m, 0, 1, bound) * \
            geometric_sum(n, bound)
    return out


def inner_dider_apply(p: BivariatePoly, h: BivariatePoly) -> BivariatePoly:
    """Ad_p(h) = p * (h(x,x) - h(y,y)), cross-checked as h |- p  -  p -| h.

    The two routes are the closed form and the operator definition
    R_vdash(p) - L_dashv(p); they must agree exactly.
    """
    closed = p * (h.subs_xx() - h.subs_yy())
    operator = vdash(h, p) - dashv(p, h)
    if closed != operator:
        raise AssertionError("inner diderivation routes disagree")
    return closed


def inner_derivation_spec(h: BivariatePoly) -> KxyOperatorSpec:
    """Derivation spec of the inner derivation a -> a -| h - h |- a.

    For univariate h the bracket action is multiplication by
    h(y) - h(x) = (x-y) * g with g assembled from geometric sums, giving
    the closed form with f = 0.  Requires h univariate in x.
    """
    if not h.is_univariate_x():
        raise ValueError("inner derivation spot-check requires univariate h")
    g = BivariatePoly.zero(h.bound)
    for (a, _b), c in h.coeffs.items():
        # h(y) - h(x) = -sum c_a (x^a - y^a) = -(x-y) * sum c_a S_a
        g = g + geometric_sum(a, h.bound).scale(-c)
    return KxyOperatorSpec("derivation", f=BivariatePoly.zero(h.bound), g=g)


# ---------------------------------------------------------------------------
# Identity sweeps


def _derivation_growth(f: BivariatePoly, g: BivariatePoly) -> int:
    return max(f.total_degree() - 1, g.total_degree() + 1, 0)


def check_derivation_identity(f: BivariatePoly, g: BivariatePoly,
                              bound: int | None = None) -> dict:
    """Check d(a*b) = d(a)*b + a*d(b) for both products on monomial pairs.

    Pairs are restricted so that every term of both sides stays within the
    bound; the sweep is exact on that set.
    """
    bound = min(f.bound, g.bound) if bound is None else bound
    spec = KxyOperatorSpec("derivation", f=f, g=g)
    growth = _derivation_growth(f, g)
    limit = bound - growth
    violations = []
    pairs = 0
    monos = [(a, b) for a in range(bound + 1) for b in range(bound + 1 - a)]
    for (a1, b1) in monos:
        for (a2, b2) in monos:
            if a1 + b1 + a2 + b2 > limit:
                continue
            pairs += 1
            u = BivariatePoly.monomial(a1, b1, 1, bound)
            v = BivariatePoly.monomial(a2, b2, 1, bound)
            du, dv = spec.apply(u), spec.apply(v)
            for label, mul in (("dashv", dashv), ("vdash", vdash)):
                lhs = spec.apply(mul(u, v))
                rhs = mul(du, v) + mul(u, dv)
                if lhs != rhs:
                    violations.append(
                        {"product": label, "pair": ((a1, b1), (a2, b2))})
    return {"pairs": pairs, "violations": violations}


def check_dider_identity(f: BivariatePoly, g: BivariatePoly,
                         bound: int | None = None) -> dict:
    """Check delta(a*b) = delta(a) -| b + a |- delta(b) for both products.

    The right side uses the same twisted shape for each product; this is
    the diderivation defining identity.  Note the sweep covers pairs whose
    product vanishes as well, where the identity is a genuine constraint.
    """
    bound = min(f.bound, g.bound) if bound is None else bound
    spec = KxyOperatorSpec("diderivation", f=f, g=g)
    growth = max(f.total_degree(), g.total_degree(), 1) - 1
    limit = bound - growth
    violations = []
    pairs = 0
    monos = [(a, b) for a in range(bound + 1) for b in range(bound + 1 - a)]
    for (a1, b1) in monos:
        for (a2, b2) in monos:
            if a1 + b1 + a2 + b2 > limit:
                continue
            pairs += 1
            u = BivariatePoly.monomial(a1, b1, 1, bound)
            v = BivariatePoly.monomial(a2, b2, 1, bound)
            du, dv = spec.apply(u), spec.apply(v)
            for label, mul in (("dashv", dashv), ("vdash", vdash)):
                lhs = spec.apply(mul(u, v))
                rhs = dashv(du, v) + vdash(u, dv)
                if lhs != rhs:
                    violations.append(
                        {"product": label, "pair": ((a1, b1), (a2, b2))})
    return {"pairs": pairs, "violations": violations}


# ---------------------------------------------------------------------------
# Plain-text polynomial form (CLI interchange)
#
# Grammar:  poly  := term (('+' | '-') term)*  with an optional leading sign
#           term  := coeff ('*' factor)* | factor ('*' factor)*
#           factor:= 'x' ['^' int] | 'y' ['^' int]
#           coeff := rational like 3, -1/2, 4/3
# Examples: "1", "x - y", "3*x^2*y - 1/2", "-x*y"


def format_poly(p: BivariatePoly) -> str:
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for (a, b), c in sorted(p.coeffs.items(),
                            key=lambda kv: (-(kv[0][0] + kv[0][1]),
                                            -kv[0][0], -kv[0][1])):
        factors = []
        if a == 1:
            factors.append("x")
        elif a > 1:
            factors.append(f"x^{a}")
        if b == 1:
            factors.append("y")
        elif b > 1:
            factors.append(f"y^{b}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def parse_poly(text: str, bound: int = DEFAULT_BOUND) -> BivariatePoly:
    """Parse the plain-text polynomial form."""
    stripped = text.strip()
    if not stripped:
        raise PolyParseError("empty polynomial text")
    # normalize: make every term start with an explicit sign, then split
    normalized = stripped.replace("-", "+-")
    if normalized.startswith("+-"):
        normalized = normalized[1:]
    coeffs: dict[Exponents, Fraction] = {}
    for index, raw_term in enumerate(normalized.split("+")):
        term = raw_term.strip()
        if not term:
            # only a leading '+' may produce an empty piece
            if index == 0:
                continue
            raise PolyParseError(f"dangling operator in {stripped!r}")
        sign = Fraction(1)
        if term.startswith("-"):
            sign = Fraction(-1)
            term = term[1:].strip()
        coeff = sign
        a = b = 0
        saw_factor = False
        for factor in term.split("*"):
            factor = factor.strip()
            if not factor:
                raise PolyParseError(f"malformed term {raw_term.strip()!r}")
            if factor[0] in "xy":
                var = factor[0]
                if factor == var:
                    power = 1
                elif factor.startswith(f"{var}^"):
                    try:
                        power = int(factor[2:])
                    except ValueError:
                        raise PolyParseError(
                            f"bad exponent in {factor!r}") from None
                    if power < 0:
                        raise PolyParseError(f"negative exponent in {factor!r}")
                else:
                    raise PolyParseError(f"malformed factor {factor!r}")
                if var == "x":
                    a += power
                else:
                    b += power
                saw_factor = True
            else:
                try:
                    coeff *= Fraction(factor)
                except (ValueError, ZeroDivisionError):
                    raise PolyParseError(
                        f"bad coefficient {factor!r}") from None
                saw_factor = True
        if not saw_factor:
            raise PolyParseError(f"malformed term {raw_term.strip()!r}")
        if a + b > bound:
            raise DegreeBoundError(
                f"degree bound exceeded: x^{a}*y^{b} with bound {bound}")
        s = coeffs.get((a, b), Fraction(0)) + coeff
        if s == 0:
            coeffs.pop((a, b), None)
        else:
            coeffs[(a, b)] = s
    return BivariatePoly(coeffs, bound)
