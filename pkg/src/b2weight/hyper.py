"""Hypergeometric machinery.

Everything here comes in two flavors:

* an exact-rational path for the finite sums (closed forms, terminating
  series, the squeeze quantities), which operate in Q or Q[k0, k1] and are
  compared with zero tolerance, and
* a floating-point path for the Gauss series F(a, b; c; z), where every value
  carries a certified bound on the truncation error.

The certified bound works as follows.  Write t_m for the m-th series term.
Once m is past the point where a+m, b+m, c+m, 1+m are all positive, each of
the two factors (a+m)/(1+m) and (b+m)/(c+m) of the term ratio is monotone in
m with limit 1, so the ratio of consecutive terms from index m on is at most

    r = z * max((a+m)/(1+m), 1) * max((b+m)/(c+m), 1),

and if r < 1 the whole tail from t_m on is at most |t_m| / (1 - r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegenerateParameterError, RegionError, ToleranceError
from .ring import K0, K1, ParamPoly, poch, poch_scalar

HALF = Fraction(1, 2)
Exact = Union[int, Fraction]

# Relative accuracy claimed for the Lanczos gamma evaluation below.
_GAMMA_RELERR = 5e-14
# Floating-point slack folded into every reported tail bound.
_EPS = 2.2e-16


@dataclass(frozen=True)
class HypResult:
    """A series value together with a certified truncation-error bound."""

    value: float
    tail_bound: float
    terms_used: int


# ---------------------------------------------------------------------------
# gamma function
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_nonpositive_integer(x: float, tol: float = 0.0) -> bool:
    return x <= 0.5 and abs(x - round(x)) <= tol and round(x) <= 0


def gamma_fn(x: float) -> float:
    """Gamma function for real x, poles excluded.

    Lanczos approximation with g = 7 and nine coefficients, combined with the
    reflection formula for x < 1/2.  Relative error is well below 1e-13 on
    (0, 20], which is the range the weight-matrix constants need.
    """
    x = float(x)
    if _is_nonpositive_integer(x):
        raise RegionError(f"gamma_fn pole at x = {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    y = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += coeff / (y + i)
    t = y + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (y + 0.5) * math.exp(-t) * acc


def _recip_gamma(x: float) -> float:
    """1 / Gamma(x), returning 0.0 at the poles."""
    if _is_nonpositive_integer(x, tol=1e-13):
        return 0.0
    return 1.0 / gamma_fn(x)


# ---------------------------------------------------------------------------
# the Gauss series
# ---------------------------------------------------------------------------


def _sum_series(
    a: float, b: float, c: float, z: float, tol: float, max_terms: int
) -> HypResult:
    """Forward summation of F(a, b; c; z) for 0 <= z < 1 with certified tail."""
    if z == 0.0:
        return HypResult(1.0, 0.0, 1)
    m_pos = int(max(0.0, math.ceil(-a), math.ceil(-b), math.ceil(-c))) + 1
    total = 0.0
    abs_sum = 0.0
    term = 1.0
    m = 0
    while m <= max_terms:
        if term == 0.0:
            # terminating series: truncation error is exactly zero
            return HypResult(total, _EPS * abs_sum * max(m, 1), max(m, 1))
        if m >= m_pos:
            r = z * max((a + m) / (1.0 + m), 1.0) * max((b + m) / (c + m), 1.0)
            if 0.0 <= r < 1.0:
                tail = abs(term) / (1.0 - r)
                if tail <= tol:
                    return HypResult(total, tail + _EPS * abs_sum * m, m)
        total += term
        abs_sum += abs(term)
        term *= (a + m) * (b + m) / ((c + m) * (1.0 + m)) * z
        m += 1
    raise ToleranceError(
        f"2F1 series did not certify tol={tol} within {max_terms} terms "
        f"(a={a}, b={b}, c={c}, z={z})"
    )


def euler_transform(
    a: float, b: float, c: float, z: float
) -> tuple[float, float, float, float, float]:
    """Parameters and prefactor of F(a,b;c;z) = (1-z)^(c-a-b) F(c-a,c-b;c;z).

    Returns (a', b', c', z, prefactor); requires z < 1.
    """
    if z >= 1.0:
        raise RegionError("euler_transform requires z < 1")
    prefactor = (1.0 - z) ** (c - a - b)
    return (c - a, c - b, c, z, prefactor)


def gauss_2f1(
    a: float,
    b: float,
    c: float,
    z: float,
    tol: float = 1e-12,
    z_complement: float | None = None,
) -> HypResult:
    """F(a, b; c; z) on 0 <= z <= 1 with a certified error bound.

    The certified ``tail_bound`` satisfies tail_bound <= tol * (1 + |value|),
    i.e. ``tol`` acts absolutely for moderate values and relatively for large
    ones (the series can legitimately blow up like (1-z)^(c-a-b) near z = 1).
    ``z_complement`` may supply 1 - z to higher accuracy than the subtraction
    would give; it matters only when z is extremely close to 1.

    Strategy: terminating series are summed exactly; z = 1 uses the
    gamma-quotient value (valid for c - a - b > 0); moderate z uses forward
    summation; z close to 1 is mapped to a pair of fast series in 1 - z,
    except within a thin sliver where c - a - b is nearly an integer and that
    map is ill-conditioned, where capped forward summation is used instead.
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    if not 0.0 <= z <= 1.0:
        raise RegionError(f"gauss_2f1 requires 0 <= z <= 1, got z = {z}")
    if _is_nonpositive_integer(c, tol=0.0):
        raise RegionError(f"gauss_2f1 parameter c = {c} is a non-positive integer")
    w = z_complement if z_complement is not None else 1.0 - z
    if not 0.0 <= w <= 1.0:
        raise RegionError(f"z_complement must lie in [0, 1], got {w}")
    # the better-conditioned representation of the argument wins
    z_eff = z if w >= 0.5 else 1.0 - w
    d = c - a - b

    terminating = (a <= 0 and a == round(a)) or (b <= 0 and b == round(b))
    if terminating:
        return _sum_series(a, b, c, z_eff, tol=0.0 if z == 0 else tol, max_terms=10**6)

    if w == 0.0:
        if d <= 0:
            raise RegionError(
                f"2F1 diverges at z = 1 when c - a - b = {d} is not positive"
            )
        value = gamma_fn(c) * gamma_fn(d) * _recip_gamma(c - a) * _recip_gamma(c - b)
        bound = 5.0 * _GAMMA_RELERR * abs(value)
        if bound > tol * (1.0 + abs(value)):
            raise ToleranceError(
                f"tol={tol} unreachable for 2F1 at z=1 (best bound {bound:.3e})"
            )
        return HypResult(value, bound, 1)

    if z_eff <= 0.75:
        return _sum_series(a, b, c, z_eff, tol, max_terms=2_000)

    # argument close to 1: map to a pair of series in w when well conditioned
    if abs(d - round(d)) >= 1e-5:
        coeff1 = gamma_fn(c) * gamma_fn(d) * _recip_gamma(c - a) * _recip_gamma(c - b)
        coeff2 = gamma_fn(c) * gamma_fn(-d) * _recip_gamma(a) * _recip_gamma(b)
        s1 = _sum_series(a, b, 1.0 - d, w, tol=1e-16, max_terms=4_000)
        s2 = _sum_series(c - a, c - b, 1.0 + d, w, tol=1e-16, max_terms=4_000)
        wd = math.exp(d * math.log(w)) if w > 0 else 0.0
        part1 = coeff1 * s1.value
        part2 = coeff2 * wd * s2.value
        value = part1 + part2
        bound = (
            abs(coeff1) * s1.tail_bound
            + abs(coeff2) * wd * s2.tail_bound
            + (abs(part1) + abs(part2)) * 8.0 * _GAMMA_RELERR
        )
        if bound > tol * (1.0 + abs(value)):
            raise ToleranceError(
                f"tol={tol} unreachable for 2F1 near z=1 (best bound {bound:.3e}; "
                f"c-a-b = {d} is close to an integer)" if abs(d - round(d)) < 1e-3
                else f"tol={tol} unreachable for 2F1 near z=1 (best bound {bound:.3e})"
            )
        return HypResult(value, bound, s1.terms_used + s2.terms_used)

    # ill-conditioned sliver: fall back to (possibly transformed) summation
    if d <= -0.5:
        a2, b2, c2, _, prefactor = euler_transform(a, b, c, z_eff)
        inner = _sum_series(a2, b2, c2, z_eff, tol / max(prefactor, 1e-300), 500_000)
        return HypResult(
            prefactor * inner.value, prefactor * inner.tail_bound, inner.terms_used
        )
    return _sum_series(a, b, c, z_eff, tol, max_terms=500_000)


_H_PARAMS = {
    1: lambda k0, k1: (-k0, 0.5 - k0 + k1, 1.5 + k1),
    2: lambda k0, k1: (-k0, -0.5 - k0 - k1, 0.5 - k1),
    3: lambda k0, k1: (k0, 0.5 + k0 + k1, 1.5 + k1),
    4: lambda k0, k1: (k0, -0.5 + k0 - k1, 0.5 - k1),
}


def h_func(
    i: int,
    z: float,
    k0: float,
    k1: float,
    tol: float = 1e-12,
    z_complement: float | None = None,
) -> HypResult:
    """One of the four auxiliary series h_i(z); h_i(0) = 1.

    All four have c - a - b = 1 +/- 2*k0, so they converge absolutely on the
    whole of [0, 1] as long as |k0| < 1/2.
    """
    if i not in _H_PARAMS:
        raise ValueError(f"h_func index must be 1..4, got {i}")
    if not 0.0 <= z <= 1.0:
        raise RegionError(f"h_func requires 0 <= z <= 1, got {z}")
    if not abs(k0) < 0.5:
        raise RegionError(f"h_func requires |k0| < 1/2, got k0 = {k0}")
    a, b, c = _H_PARAMS[i](float(k0), float(k1))
    return gauss_2f1(a, b, c, z, tol=tol, z_complement=z_complement)


# ---------------------------------------------------------------------------
# the two coefficient sequences: recurrence and closed forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlphaBetaSeq:
    """Exact coefficient sequences indexed 0..n_max, with alpha[0] = 1."""

    n_max: int
    alpha: tuple[ParamPoly, ...]
    beta: tuple[ParamPoly, ...]


def alpha_beta_recurrence(n_max: int) -> AlphaBetaSeq:
    """Run the two-term recurrence for the sequences alpha_n, beta_n.

    beta_n  = -(1+2k1-2k0)/(2(n+1)) * alpha_n + n(2n+1+2k0)/((n+1)(2n+1)) * beta_{n-1}
    alpha_n = -(1+2k1+2k0)/(2n+1) * beta_{n-1} + (2n-1-2k0)/(2n+1) * alpha_{n-1}

    started from alpha_0 = 1.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    one_plus = 1 + 2 * K1 + 2 * K0
    one_minus = 1 + 2 * K1 - 2 * K0
    alpha = [ParamPoly.const(1)]
    beta = [(-one_minus) / 2]
    for n in range(1, n_max + 1):
        a_n = (-one_plus * beta[n - 1]) / (2 * n + 1) + (
            ((2 * n - 1) - 2 * K0) * alpha[n - 1]
        ) / (2 * n + 1)
        alpha.append(a_n)
        b_n = (-one_minus * a_n) / (2 * (n + 1)) + (
            n * ((2 * n + 1) + 2 * K0) * beta[n - 1]
        ) / ((n + 1) * (2 * n + 1))
        beta.append(b_n)
    return AlphaBetaSeq(n_max, tuple(alpha), tuple(beta))


def alpha_closed(n: int) -> ParamPoly:
    """Single-sum closed form for alpha_n, exact in Q[k0, k1]."""
    if n < 0:
        raise ValueError("n must be non-negative")
    k_plus = K1 + K0
    k_minus = K1 - K0
    scale = Fraction(1) / (math.factorial(n) * poch_scalar(Fraction(3, 2), n))
    total = ParamPoly.zero()
    for j in range(n + 1):
        rational = (
            poch_scalar(Fraction(-n), j) ** 2 / Fraction(math.factorial(j))
        )
        total = total + (
            poch(-K1, j)
            * poch(Fraction(3, 2) + k_plus, n - j)
            * poch(HALF + k_minus, n - j)
        ) * rational
    return total * scale


def beta_closed(n: int) -> ParamPoly:
    """Single-sum closed form for beta_n, exact in Q[k0, k1]."""
    if n < 0:
        raise ValueError("n must be non-negative")
    k_plus = K1 + K0
    k_minus = K1 - K0
    scale = Fraction(-1) / (math.factorial(n + 1) * poch_scalar(Fraction(3, 2), n))
    total = ParamPoly.zero()
    for j in range(n + 1):
        rational = (
            poch_scalar(Fraction(-n), j)
            * poch_scalar(Fraction(-1 - n), j)
            / Fraction(math.factorial(j))
        )
        total = total + (
            poch(-K1, j)
            * poch(Fraction(3, 2) + k_plus, n - j)
            * poch(HALF + k_minus, n + 1 - j)
        ) * rational
    return total * scale


def s_inner_closed(n: int, kind: str) -> ParamPoly:
    """Closed form of the two sphere-pairing values, exact in Q[k0, k1].

    kind "p12" gives the even pairing (degree 4n+1 against degree 1) and
    "p14" the odd one (degree 4n+3 against degree 1).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    k_plus = K1 + K0
    k_minus = K1 - K0
    if kind == "p12":
        scale = Fraction(1) / (math.factorial(n) * poch_scalar(HALF, n + 1))
        total = ParamPoly.zero()
        for j in range(n + 1):
            rational = poch_scalar(Fraction(-n), j) ** 2 / Fraction(math.factorial(j))
            total = total + (
                poch(-K1, j)
                * poch(HALF + k_plus, n + 1 - j)
                * poch(HALF + k_minus, n - j)
            ) * rational
        return total * scale
    if kind == "p14":
        scale = Fraction(-1) / (math.factorial(n + 1) * poch_scalar(HALF, n + 1))
        total = ParamPoly.zero()
        for j in range(n + 1):
            rational = (
                poch_scalar(Fraction(-n), j)
                * poch_scalar(Fraction(-n - 1), j)
                / Fraction(math.factorial(j))
            )
            total = total + (
                poch(-K1, j)
                * poch(HALF + k_plus, n + 1 - j)
                * poch(HALF + k_minus, n + 1 - j)
            ) * rational
        return total * scale
    raise ValueError(f"kind must be 'p12' or 'p14', got {kind!r}")


# ---------------------------------------------------------------------------
# terminating sums at unit argument
# ---------------------------------------------------------------------------


def _half_like(x):
    """1/2 in the arithmetic of x (exact for Fraction/int, float otherwise)."""
    if isinstance(x, (Fraction, int)):
        return HALF
    return 0.5


def f_values(n: int, k0, k1):
    """The two terminating 3F2-type sums at unit argument.

    With Fraction (or int) parameters the computation is exact; with floats it
    is done in floats.  All terms share one sign, so the float path loses no
    accuracy to cancellation.  Raises DegenerateParameterError when a lower
    Pochhammer factor vanishes (parameters with -k1 +/- k0 in 1/2 + N_0).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    exact = isinstance(k0, (Fraction, int)) and isinstance(k1, (Fraction, int))
    half = HALF if exact else 0.5

    def sum_3f2(upper, lower):
        total = upper[2] * 0 + 1  # one, in the operand arithmetic
        term = total
        for j in range(n):
            num = (upper[0] + j) * (upper[1] + j) * (upper[2] + j)
            den = (lower[0] + j) * (lower[1] + j) * (j + 1)
            if (den == 0) if exact else (abs(den) < 1e-12):
                raise DegenerateParameterError(
                    f"denominator Pochhammer vanishes at step {j} "
                    f"(k0={k0}, k1={k1}, n={n})"
                )
            term = term * num / den
            total = total + term
        return total

    f1 = sum_3f2(
        (-n + k0 * 0, -n + k0 * 0, -k1),
        (-n - half - k1 - k0, -n + half - k1 + k0),
    )
    f2 = sum_3f2(
        (-n + k0 * 0, -n - 1 + k0 * 0, -k1),
        (-n - half - k1 - k0, -n - half - k1 + k0),
    )
    return f1, f2


def chu_vandermonde(n: int, k1: Exact) -> tuple[Fraction, Fraction]:
    """Both sides of the terminating sum identity at unit argument.

    Returns (finite sum of F(-n, -k1; -n - 2k1; 1), (1+k1)_n / (1+2k1)_n);
    the two entries are equal whenever no denominator factor vanishes.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    k1 = Fraction(k1)
    total = Fraction(1)
    term = Fraction(1)
    for j in range(n):
        den = (-n - 2 * k1 + j) * (j + 1)
        if den == 0:
            raise DegenerateParameterError(
                f"denominator Pochhammer vanishes at step {j} (k1={k1}, n={n})"
            )
        term = term * (-n + j) * (-k1 + j) / den
        total += term
    den_poch = poch_scalar(1 + 2 * k1, n)
    if den_poch == 0:
        raise DegenerateParameterError(f"(1+2k1)_n vanishes for k1={k1}, n={n}")
    rhs = poch_scalar(1 + k1, n) / den_poch
    return total, rhs


# ---------------------------------------------------------------------------
# squeeze comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SqueezeReport:
    """Exact values of the two bracketing sums and the middle term.

    For c >= 0 the chain is upper_sum <= middle <= plain_sum; for c <= 0 it
    reverses; at c = 0 all three equal 1.
    """

    n: int
    a: Fraction
    b: Fraction
    c: Fraction
    plain_sum: Fraction
    middle: Fraction
    shifted_sum: Fraction
    branch: str
    chain_holds: bool


def squeeze_check(n: int, a: Exact, b: Exact, c: Exact) -> SqueezeReport:
    """Evaluate the three comparison quantities exactly and test the ordering.

    Requires 0 < a < 1, -1 < b < 0 and c > -1.  ``plain_sum`` is the balanced
    terminating sum with doubled upper index -n, ``shifted_sum`` the variant
    with upper indices -n, -n-1, and ``middle`` the ratio
    (1+a+b+c)_n / (1+a+b)_n.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if not (0 < a < 1 and -1 < b < 0 and c > -1):
        raise RegionError(
            f"squeeze_check requires 0<a<1, -1<b<0, c>-1; got a={a}, b={b}, c={c}"
        )

    def terminating(u1, u2, l1, l2):
        total = Fraction(1)
        term = Fraction(1)
        for j in range(n):
            term = term * (u1 + j) * (u2 + j) * (c + j) / ((l1 + j) * (l2 + j) * (j + 1))
            total += term
        return total

    plain = terminating(-n, -n, -n - a, -n - b)
    shifted = terminating(-n, -n - 1, -n - a, -n - b - 1)
    middle = poch_scalar(1 + a + b + c, n) / poch_scalar(1 + a + b, n)
    if c >= 0:
        branch = "c>=0"
        holds = shifted <= middle <= plain
    else:
        branch = "c<=0"
        holds = plain <= middle <= shifted
    return SqueezeReport(n, a, b, c, plain, middle, shifted, branch, holds)


# ---------------------------------------------------------------------------
# ratio asymptotics
# ---------------------------------------------------------------------------


def stirling_ratio(a: float, b: float, n: int) -> tuple[float, float]:
    """((a)_n / (b)_n computed as a direct product, its large-n asymptote).

    The asymptote is Gamma(b)/Gamma(a) * n^(a-b).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    ratio = 1.0
    for i in range(n):
        ratio *= (a + i) / (b + i)
    asymptote = gamma_fn(b) / gamma_fn(a) * float(n) ** (a - b) if n > 0 else 1.0
    return ratio, asymptote


def asym_f_check(n: int, k0: float, k1: float) -> tuple[float, float]:
    """Normalized values of the two unit-argument sums at index n.

    Returns f_i(n) * n^k1 * Gamma(1+k1) / Gamma(1+2k1) for i = 1, 2.  Inside
    the region -1/2 < k0 +/- k1 < 1/2 both values tend to 1 as n grows, which
    is the asymptotic content behind the normalization constant.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not (abs(k0 + k1) < 0.5 and abs(k0 - k1) < 0.5):
        raise RegionError(
            f"asym_f_check requires -1/2 < k0 +/- k1 < 1/2; got ({k0}, {k1})"
        )
    f1, f2 = f_values(n, float(k0), float(k1))
    scale = float(n) ** k1 * gamma_fn(1.0 + k1) / gamma_fn(1.0 + 2.0 * k1)
    return f1 * scale, f2 * scale
