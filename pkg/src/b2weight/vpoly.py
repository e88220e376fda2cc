"""Vector-valued polynomials on R^2 and the dihedral differential calculus.

The symmetry group is the 8-element symmetry group of the square, acting on
points by signed coordinate permutations x -> x.M and on the value space
spanned by t1, t2 by the matching signed permutation:

    (w f)(x) = f(x.M) . M^{-1}

A vector polynomial is stored sparsely with one entry per monomial-and-slot,

    VPoly terms: {(a, b, s): ParamPoly}   meaning  sum of  c * x1^a x2^b t_s

and scalar polynomials (``XPoly``) drop the slot index.  All coefficients
live in Q[k0, k1], so the operator identities in this module are checked as
exact polynomial statements, never numerically.

The modified first-order operators act as a plain derivative plus, for each
of the four positive roots v (the two coordinate directions with weight k1,
the two diagonals with weight k0), the exact divided difference of the scalar
part along v with the root's reflection applied to the slot index.  Divided
differences are exact polynomial divisions; a nonzero remainder raises, since
it can only mean an implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import hyper
from .errors import InexactDivisionError, InvarianceError, NotProportionalError
from .ring import K0, K1, ParamPoly

XKey = tuple[int, int]
VKey = tuple[int, int, int]
Coeff = Union[ParamPoly, Fraction, int]


def _clean(terms: dict, key, delta) -> None:
    new = terms.get(key, ParamPoly.zero()) + delta
    if new.is_zero():
        terms.pop(key, None)
    else:
        terms[key] = new


# ---------------------------------------------------------------------------
# group elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    """A signed coordinate permutation; ``matrix`` is row-major 2x2."""

    name: str
    matrix: tuple[tuple[int, int], tuple[int, int]]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        m, n = self.matrix, other.matrix
        prod = tuple(
            tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2))
            for i in range(2)
        )
        return GroupElement(f"{self.name}*{other.name}", prod)  # type: ignore[arg-type]

    def column(self, j: int) -> tuple[int, int]:
        """(row, sign) of the single nonzero entry in column j (0-based)."""
        for i in range(2):
            if self.matrix[i][j]:
                return i, self.matrix[i][j]
        raise ValueError("degenerate group matrix")

    def point_image(self, a: int, b: int) -> tuple[XKey, int]:
        """Monomial and sign of (x.M)_1^a (x.M)_2^b."""
        row1, sgn1 = self.column(0)
        row2, sgn2 = self.column(1)
        exps = [0, 0]
        exps[row1] += a
        exps[row2] += b
        sign = (sgn1 ** (a % 2)) * (sgn2 ** (b % 2))
        return (exps[0], exps[1]), sign

    def t_image(self, s: int) -> tuple[int, int]:
        """(sign, slot) of t_s . M^{-1} for s in {1, 2}."""
        row, sgn = self.column(s - 1)
        return sgn, row + 1


IDENTITY = GroupElement("e", ((1, 0), (0, 1)))
SIGMA_1 = GroupElement("s1", ((-1, 0), (0, 1)))
SIGMA_2 = GroupElement("s2", ((1, 0), (0, -1)))
SIGMA_D_PLUS = GroupElement("sd+", ((0, 1), (1, 0)))
SIGMA_D_MINUS = GroupElement("sd-", ((0, -1), (-1, 0)))
_R90 = GroupElement("r90", ((0, 1), (-1, 0)))
_R180 = GroupElement("r180", ((-1, 0), (0, -1)))
_R270 = GroupElement("r270", ((0, -1), (1, 0)))

ALL_ELEMENTS: tuple[GroupElement, ...] = (
    IDENTITY,
    SIGMA_1,
    SIGMA_2,
    SIGMA_D_PLUS,
    SIGMA_D_MINUS,
    _R90,
    _R180,
    _R270,
)

REFLECTIONS: tuple[GroupElement, ...] = (
    SIGMA_1,
    SIGMA_2,
    SIGMA_D_PLUS,
    SIGMA_D_MINUS,
)

# positive roots: (root vector, reflection, weight symbol)
_ROOT_DATA = (
    ((1, 0), SIGMA_1, K1),
    ((0, 1), SIGMA_2, K1),
    ((1, -1), SIGMA_D_PLUS, K0),
    ((1, 1), SIGMA_D_MINUS, K0),
)


# ---------------------------------------------------------------------------
# scalar polynomials in x1, x2
# ---------------------------------------------------------------------------


class XPoly:
    """Scalar polynomial in x1, x2 with ParamPoly coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[XKey, Coeff] | None = None):
        clean: dict[XKey, ParamPoly] = {}
        if terms:
            for key, coeff in terms.items():
                poly = ParamPoly.coerce(coeff)
                if not poly.is_zero():
                    clean[key] = poly
        self._terms = clean

    @property
    def terms(self) -> dict[XKey, ParamPoly]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterable[tuple[XKey, ParamPoly]]:
        return iter(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "XPoly") -> "XPoly":
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            _clean(out, key, coeff)
        result = XPoly.__new__(XPoly)
        result._terms = out
        return result

    def __neg__(self) -> "XPoly":
        result = XPoly.__new__(XPoly)
        result._terms = {k: -c for k, c in self._terms.items()}
        return result

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other: "XPoly | Coeff") -> "XPoly":
        if not isinstance(other, XPoly):
            scalar = ParamPoly.coerce(other)
            result = XPoly.__new__(XPoly)
            result._terms = (
                {}
                if scalar.is_zero()
                else {k: c * scalar for k, c in self._terms.items()}
            )
            return result
        out: dict[XKey, ParamPoly] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                _clean(out, (a1 + a2, b1 + b2), c1 * c2)
        result = XPoly.__new__(XPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "XPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = XPoly({(0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, i: int) -> "XPoly":
        out: dict[XKey, ParamPoly] = {}
        for (a, b), coeff in self._terms.items():
            if i == 1 and a:
                _clean(out, (a - 1, b), coeff * a)
            elif i == 2 and b:
                _clean(out, (a, b - 1), coeff * b)
        result = XPoly.__new__(XPoly)
        result._terms = out
        return result

    def laplace(self) -> "XPoly":
        """Classical Laplacian (second derivatives only)."""
        return self.derivative(1).derivative(1) + self.derivative(2).derivative(2)

    def compose(self, w: GroupElement) -> "XPoly":
        """p(x.M) as a polynomial in x."""
        out: dict[XKey, ParamPoly] = {}
        for (a, b), coeff in self._terms.items():
            key, sign = w.point_image(a, b)
            _clean(out, key, coeff if sign > 0 else -coeff)
        result = XPoly.__new__(XPoly)
        result._terms = out
        return result

    def is_w_invariant(self) -> bool:
        return all(self.compose(w) == self for w in ALL_ELEMENTS)

    def __repr__(self) -> str:
        if not self._terms:
            return "XPoly(0)"
        bits = [f"({coeff})*x1^{a}*x2^{b}" for (a, b), coeff in sorted(self._terms.items())]
        return "XPoly(" + " + ".join(bits) + ")"


def divide_by_linear(p: XPoly, root: tuple[int, int]) -> XPoly:
    """Exact division of p by v1*x1 + v2*x2 for the four root directions.

    Raises InexactDivisionError when the remainder is nonzero.
    """
    v1, v2 = root
    if (v1, v2) == (1, 0) or (v1, v2) == (0, 1):
        pos = 0 if v1 else 1
        out: dict[XKey, ParamPoly] = {}
        for (a, b), coeff in p:
            e = (a, b)[pos]
            if e == 0:
                raise InexactDivisionError(f"{p!r} is not divisible by x{pos + 1}")
            out[(a - 1, b) if pos == 0 else (a, b - 1)] = coeff
        result = XPoly.__new__(XPoly)
        result._terms = out
        return result
    if v1 != 1 or v2 not in (1, -1):
        raise ValueError(f"unsupported linear form {root}")
    # synthetic division by x1 + v2*x2, i.e. substitute x1 -> -v2*x2
    by_a: dict[int, dict[int, ParamPoly]] = {}
    for (a, b), coeff in p:
        by_a.setdefault(a, {})[b] = coeff
    if not by_a:
        return XPoly()
    quotient: dict[XKey, ParamPoly] = {}
    carry: dict[int, ParamPoly] = {}
    for a in range(max(by_a), 0, -1):
        level = dict(by_a.get(a, {}))
        for b, coeff in carry.items():
            _clean(level, b, coeff)
        for b, coeff in level.items():
            quotient[(a - 1, b)] = coeff
        # subtract (x1 + v2*x2) * level from the remainder: the x1-part
        # cancels, the x2-part propagates one x1-degree down
        carry = {b + 1: -v2 * coeff for b, coeff in level.items()}
    remainder = dict(by_a.get(0, {}))
    for b, coeff in carry.items():
        _clean(remainder, b, coeff)
    if remainder:
        raise InexactDivisionError(
            f"division by x1 {'+' if v2 > 0 else '-'} x2 left remainder {remainder}"
        )
    result = XPoly.__new__(XPoly)
    result._terms = {k: c for k, c in quotient.items() if not c.is_zero()}
    return result


# ---------------------------------------------------------------------------
# vector-valued polynomials
# ---------------------------------------------------------------------------


class VPoly:
    """Polynomial map R^2 -> span(t1, t2) with ParamPoly coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[VKey, Coeff] | None = None):
        clean: dict[VKey, ParamPoly] = {}
        if terms:
            for (a, b, s), coeff in terms.items():
                if s not in (1, 2):
                    raise ValueError(f"slot index must be 1 or 2, got {s}")
                poly = ParamPoly.coerce(coeff)
                if not poly.is_zero():
                    clean[(a, b, s)] = poly
        self._terms = clean

    @classmethod
    def from_components(cls, f1: XPoly, f2: XPoly) -> "VPoly":
        terms: dict[VKey, ParamPoly] = {}
        for (a, b), coeff in f1:
            terms[(a, b, 1)] = coeff
        for (a, b), coeff in f2:
            terms[(a, b, 2)] = coeff
        result = cls.__new__(cls)
        result._terms = terms
        return result

    @property
    def terms(self) -> dict[VKey, ParamPoly]:
        return dict(self._terms)

    def component(self, s: int) -> XPoly:
        result = XPoly.__new__(XPoly)
        result._terms = {
            (a, b): coeff for (a, b, slot), coeff in self._terms.items() if slot == s
        }
        return result

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "VPoly") -> "VPoly":
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            _clean(out, key, coeff)
        result = VPoly.__new__(VPoly)
        result._terms = out
        return result

    def __neg__(self) -> "VPoly":
        result = VPoly.__new__(VPoly)
        result._terms = {k: -c for k, c in self._terms.items()}
        return result

    def __sub__(self, other: "VPoly") -> "VPoly":
        return self + (-other)

    def __mul__(self, other: Coeff) -> "VPoly":
        scalar = ParamPoly.coerce(other)
        result = VPoly.__new__(VPoly)
        result._terms = (
            {}
            if scalar.is_zero()
            else {k: c * scalar for k, c in self._terms.items()}
        )
        return result

    __rmul__ = __mul__

    def scale_x(self, p: XPoly) -> "VPoly":
        """Multiply by a scalar polynomial in x."""
        out: dict[VKey, ParamPoly] = {}
        for (a1, b1), c1 in p:
            for (a2, b2, s), c2 in self._terms.items():
                _clean(out, (a1 + a2, b1 + b2, s), c1 * c2)
        result = VPoly.__new__(VPoly)
        result._terms = out
        return result

    def derivative(self, i: int) -> "VPoly":
        out: dict[VKey, ParamPoly] = {}
        for (a, b, s), coeff in self._terms.items():
            if i == 1 and a:
                _clean(out, (a - 1, b, s), coeff * a)
            elif i == 2 and b:
                _clean(out, (a, b - 1, s), coeff * b)
        result = VPoly.__new__(VPoly)
        result._terms = out
        return result

    def t_substitute(self, images: Mapping[int, tuple[int, int]]) -> "VPoly":
        """Replace each slot t_s by sign * t_slot per ``images[s] = (sign, slot)``."""
        out: dict[VKey, ParamPoly] = {}
        for (a, b, s), coeff in self._terms.items():
            sign, slot = images[s]
            _clean(out, (a, b, slot), coeff if sign > 0 else -coeff)
        result = VPoly.__new__(VPoly)
        result._terms = out
        return result

    def homogeneous_degree(self) -> int | None:
        """Common total x-degree, None for the zero polynomial.

        Raises ValueError when terms of different degrees are mixed.
        """
        degrees = {a + b for (a, b, _s) in self._terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"mixed homogeneous degrees {sorted(degrees)}")
        return degrees.pop()

    def __repr__(self) -> str:
        if not self._terms:
            return "VPoly(0)"
        bits = [
            f"({coeff})*x1^{a}*x2^{b}*t{s}"
            for (a, b, s), coeff in sorted(self._terms.items())
        ]
        return "VPoly(" + " + ".join(bits) + ")"


# frequently used building blocks
X1 = XPoly({(1, 0): 1})
X2 = XPoly({(0, 1): 1})
PHI = XPoly({(2, 0): 1, (0, 2): -1})
RADIUS_SQ = XPoly({(2, 0): 1, (0, 2): 1})
P12 = VPoly({(0, 1, 1): -1, (1, 0, 2): 1})
P14 = VPoly({(0, 1, 1): -1, (1, 0, 2): -1})


def group_act(w: GroupElement, f: VPoly) -> VPoly:
    """(w f)(x) = f(x.M) . M^{-1}."""
    out: dict[VKey, ParamPoly] = {}
    for (a, b, s), coeff in f.terms.items():
        (na, nb), x_sign = w.point_image(a, b)
        t_sign, slot = w.t_image(s)
        _clean(out, (na, nb, slot), coeff * (x_sign * t_sign))
    result = VPoly.__new__(VPoly)
    result._terms = out
    return result


def dunkl_d(i: int, f: VPoly) -> VPoly:
    """First-order modified derivative in direction i (1 or 2)."""
    if i not in (1, 2):
        raise ValueError(f"direction must be 1 or 2, got {i}")
    result = f.derivative(i)
    for root, refl, weight in _ROOT_DATA:
        v_i = root[i - 1]
        if v_i == 0:
            continue
        for s in (1, 2):
            part = f.component(s)
            if part.is_zero():
                continue
            numerator = part - part.compose(refl)
            if numerator.is_zero():
                continue
            quotient = divide_by_linear(numerator, root)
            sign, slot = refl.t_image(s)
            factor = weight * (v_i * sign)
            add = VPoly.__new__(VPoly)
            add._terms = {
                (a, b, slot): coeff * factor for (a, b), coeff in quotient
            }
            result = result + add
    return result


def laplacian(f: VPoly) -> VPoly:
    """Sum of the squares of the two modified derivatives."""
    return dunkl_d(1, dunkl_d(1, f)) + dunkl_d(2, dunkl_d(2, f))


def laplacian_power(f: VPoly, m: int) -> VPoly:
    if m < 0:
        raise ValueError("power must be non-negative")
    for _ in range(m):
        if f.is_zero():
            break
        f = laplacian(f)
    return f


def product_rule_residual(f: XPoly, g: VPoly) -> VPoly:
    """Difference of the two sides of the invariant-factor product rule.

    For group-invariant scalar f the modified Laplacian satisfies

        L(f g) - f L(g) = g * (lap f) + 2 <grad f, grad g>
            + 2 k1 [ g(x,-t1,t2) d1f/x1 + g(x,t1,-t2) d2f/x2 ]
            + 2 k0 [ g(x,t2,t1) (d1f-d2f)/(x1-x2)
                     + g(x,-t2,-t1) (d1f+d2f)/(x1+x2) ]

    so the returned polynomial must be identically zero.  Raises
    InvarianceError when f is not group-invariant.
    """
    if not f.is_w_invariant():
        raise InvarianceError("scalar factor is not invariant under the group")
    lhs = laplacian(g.scale_x(f)) - laplacian(g).scale_x(f)

    d1f = f.derivative(1)
    d2f = f.derivative(2)
    rhs = g.scale_x(f.laplace())
    rhs = rhs + (g.derivative(1).scale_x(d1f) + g.derivative(2).scale_x(d2f)) * 2
    rhs = rhs + (
        g.t_substitute({1: (-1, 1), 2: (1, 2)}).scale_x(divide_by_linear(d1f, (1, 0)))
        + g.t_substitute({1: (1, 1), 2: (-1, 2)}).scale_x(divide_by_linear(d2f, (0, 1)))
    ) * (2 * K1)
    rhs = rhs + (
        g.t_substitute({1: (1, 2), 2: (1, 1)}).scale_x(
            divide_by_linear(d1f - d2f, (1, -1))
        )
        + g.t_substitute({1: (-1, 2), 2: (-1, 1)}).scale_x(
            divide_by_linear(d1f + d2f, (1, 1))
        )
    ) * (2 * K0)
    return lhs - rhs


def _extract_multiple_of_p12(f: VPoly) -> ParamPoly:
    """The scalar c with f = c * p_{1,2}, or raise NotProportionalError."""
    allowed = {(0, 1, 1), (1, 0, 2)}
    extra = set(f.terms) - allowed
    if extra:
        raise NotProportionalError(f"unexpected support {sorted(extra)}")
    c_pos = f.terms.get((1, 0, 2), ParamPoly.zero())
    c_neg = f.terms.get((0, 1, 1), ParamPoly.zero())
    if c_pos + c_neg != ParamPoly.zero():
        raise NotProportionalError("coefficients do not match the degree-1 carrier")
    return c_pos


def alpha_beta_via_laplacian(n: int) -> tuple[ParamPoly, ParamPoly]:
    """Scaled sequence values from iterated Laplacians, exact in Q[k0, k1].

    Applies the modified Laplacian 2n times to phi^(2n) p_{1,2} and 2n+1
    times to phi^(2n+1) p_{1,4}; both collapse to multiples of p_{1,2} whose
    scalars are returned.  Exact but cost grows quickly; n <= 4 is the
    supported desk-scale range.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    even = laplacian_power(P12.scale_x(PHI ** (2 * n)), 2 * n)
    alpha_scaled = _extract_multiple_of_p12(even)
    odd = laplacian_power(P14.scale_x(PHI ** (2 * n + 1)), 2 * n + 1)
    beta_scaled = _extract_multiple_of_p12(odd)
    return alpha_scaled, beta_scaled


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def alpha_prime_scale(n: int) -> Fraction:
    """2^(4n) (2n)! (2n+1)! relating alpha_n to its operator-route value."""
    return Fraction(2 ** (4 * n) * _factorial(2 * n) * _factorial(2 * n + 1))


def beta_prime_scale(n: int) -> Fraction:
    """2^(4n+2) (2n+1)! (2n+2)! relating beta_n to its operator-route value."""
    return Fraction(2 ** (4 * n + 2) * _factorial(2 * n + 1) * _factorial(2 * n + 2))


def inner_product_S_exact(n: int, kind: str, backend: str = "operator") -> ParamPoly:
    """Exact sphere-pairing value as an element of Q[k0, k1].

    kind "p12" returns alpha_n * (1 + 2k1 + 2k0), kind "p14" the beta variant.
    backend "operator" recomputes via iterated Laplacians (supported n <= 4);
    backend "recurrence" uses the two-term recurrence and scales to any n.
    """
    if kind not in ("p12", "p14"):
        raise ValueError(f"kind must be 'p12' or 'p14', got {kind!r}")
    anchor = 1 + 2 * K1 + 2 * K0
    if backend == "operator":
        if n > 4:
            raise ValueError("operator backend supports n <= 4; use 'recurrence'")
        alpha_scaled, beta_scaled = alpha_beta_via_laplacian(n)
        if kind == "p12":
            return (alpha_scaled / alpha_prime_scale(n)) * anchor
        return (beta_scaled / beta_prime_scale(n)) * anchor
    if backend == "recurrence":
        seq = hyper.alpha_beta_recurrence(n)
        return (seq.alpha[n] if kind == "p12" else seq.beta[n]) * anchor
    raise ValueError(f"unknown backend {backend!r}")
