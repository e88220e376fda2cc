"""High-accuracy quadrature for the sector integrals.

The sphere pairings reduce (after the slope substitution v = u^2) to
one-dimensional integrals

    int_0^1 v^alpha (1 - v)^beta * smooth(v) dv,      alpha, beta > -1,

with algebraic endpoint singularities carried entirely by the explicit
exponents.  The engine is Gauss-Jacobi with exactly those exponents and
node-count doubling until two refinements agree; when the smooth factor keeps
a weak endpoint kink that stalls the algebraic rule, a double-exponential
rule on the full integrand takes over.  The radial half of the plane integral
is folded in analytically (a factor 2^l l! in the pairing normalization), so
no infinite-domain quadrature appears anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import RegionError, ToleranceError
from .hyper import gamma_fn, h_func
from .weight import ParamPoint, d_consts, eval_L

_SECTOR = math.pi / 4


@dataclass(frozen=True)
class QuadResult:
    """Integral value with a refinement-difference error estimate."""

    value: float
    error_estimate: float
    nodes: int


# ---------------------------------------------------------------------------
# engines
# ---------------------------------------------------------------------------


def _gauss_jacobi_01(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights for integrating v^alpha (1-v)^beta * f(v) over [0, 1].

    Golub-Welsch on the symmetric tridiagonal recurrence matrix.  The first
    moment is formed through lgamma, so very large exponents (deep endpoint
    powers such as (1-v)^n with n in the hundreds) stay inside float range.
    """
    a_exp = float(beta)   # exponent of (1-x) in the [-1, 1] convention
    b_exp = float(alpha)  # exponent of (1+x)
    s = a_exp + b_exp
    diag = np.empty(n)
    diag[0] = (b_exp - a_exp) / (s + 2.0)
    i = np.arange(1, n, dtype=float)
    diag[1:] = (b_exp**2 - a_exp**2) / ((2.0 * i + s) * (2.0 * i + s + 2.0))
    off = np.empty(max(n - 1, 0))
    if n > 1:
        # the j = 1 coefficient in a form with the (1+s) factor cancelled,
        # which the Chebyshev-type case s = -1 needs
        off[0] = math.sqrt(
            4.0 * (1.0 + a_exp) * (1.0 + b_exp) / ((2.0 + s) ** 2 * (3.0 + s))
        )
        j = np.arange(2, n, dtype=float)
        num = 4.0 * j * (j + a_exp) * (j + b_exp) * (j + s)
        den = (2.0 * j + s) ** 2 * ((2.0 * j + s) ** 2 - 1.0)
        off[1:] = np.sqrt(num / den)
    x, vecs = eigh_tridiagonal(diag, off)
    v = 0.5 * (x + 1.0)
    mu0 = math.exp(
        math.lgamma(alpha + 1.0) + math.lgamma(beta + 1.0) - math.lgamma(alpha + beta + 2.0)
    )
    return v, mu0 * vecs[0, :] ** 2


def tanh_sinh(
    f: Callable[[float, float, float], float],
    tol: float = 1e-10,
    max_level: int = 9,
    t_max: float = 6.2,
) -> QuadResult:
    """Double-exponential rule on (0, 1) for endpoint-singular integrands.

    The integrand is called as f(v, v, 1 - v) with the distances to both
    endpoints supplied exactly, so algebraic endpoint factors can be formed
    from them without catastrophic cancellation.
    """
    previous = None
    value = 0.0
    nodes = 0
    for level in range(max_level + 1):
        h = 1.0 / 2**level
        count = int(math.floor(t_max / h))
        total = 0.0
        for j in range(-count, count + 1):
            t = j * h
            two_phi = math.pi * math.sinh(t)
            # overflow-safe sigmoid pieces: em = exp(-|2 phi|) in (0, 1]
            em = math.exp(-abs(two_phi))
            near = em / (1.0 + em)   # distance to the closer endpoint
            far = 1.0 / (1.0 + em)
            dist0, dist1 = (near, far) if two_phi >= 0 else (far, near)
            sech_sq = 4.0 * em / (1.0 + em) ** 2  # 1 / cosh(phi)^2
            dvdt = 0.25 * math.pi * math.cosh(t) * sech_sq
            if dvdt == 0.0 or near == 0.0:
                continue
            total += f(dist0, dist0, dist1) * dvdt
        value = total * h
        nodes += 2 * count + 1
        if previous is not None:
            err = abs(value - previous)
            if err <= tol * (1.0 + abs(value)) and level >= 3:
                return QuadResult(value, err, nodes)
        previous = value
    raise ToleranceError(f"double-exponential rule did not reach tol={tol}")


def singular_integral(
    alpha: float,
    beta: float,
    smooth: Callable[[np.ndarray], np.ndarray],
    tol: float = 1e-10,
    n_start: int = 24,
    n_max: int = 3072,
) -> QuadResult:
    """int_0^1 v^alpha (1-v)^beta smooth(v) dv with certified-by-agreement error.

    ``smooth`` must accept a numpy array of nodes in (0, 1).  Exponents must
    exceed -1.  Falls back to the double-exponential rule when node doubling
    stalls (this happens when ``smooth`` itself has a weak endpoint kink).
    """
    if alpha <= -1.0 or beta <= -1.0:
        raise RegionError(f"endpoint exponents must exceed -1, got ({alpha}, {beta})")
    previous = None
    total_nodes = 0
    n = n_start
    while n <= n_max:
        v, w = _gauss_jacobi_01(n, alpha, beta)
        value = float(np.dot(w, np.asarray(smooth(v), dtype=float)))
        total_nodes += n
        if previous is not None:
            err = abs(value - previous)
            if err <= tol * (1.0 + abs(value)):
                return QuadResult(value, err, total_nodes)
        previous = value
        n *= 2

    def full(_v: float, dist0: float, dist1: float) -> float:
        weight = math.exp(alpha * math.log(dist0) + beta * math.log(dist1))
        return weight * float(smooth(np.array([dist0]))[0])

    de = tanh_sinh(full, tol=tol)
    return QuadResult(de.value, de.error_estimate, total_nodes + de.nodes)


# ---------------------------------------------------------------------------
# sector pairings
# ---------------------------------------------------------------------------


def _h_on_nodes(i: int, v: np.ndarray, p: ParamPoint, tol: float) -> np.ndarray:
    return np.array([h_func(i, float(z), p.k0, p.k1, tol=tol).value for z in v])


def sector_inner_numeric(
    n: int,
    kind: str,
    p: ParamPoint,
    tol: float = 1e-9,
    mode: str = "h",
) -> QuadResult:
    """Numerical value of the sphere pairing of phi^(2n) p12 (or the odd
    phi^(2n+1) p14 variant) against p12, for positive-definite parameters.

    mode "h" (default) integrates the factored single-series form in v = u^2
    with Gauss-Jacobi carrying the exact endpoint exponents; mode "direct"
    integrates the raw matrix form over the angle with a double-exponential
    rule and exists as an independent cross-check of the factored route.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind not in ("p12", "p14"):
        raise ValueError(f"kind must be 'p12' or 'p14', got {kind!r}")
    if not p.positive_definite:
        raise RegionError(f"sector pairing needs the positive-definite region; got {p}")
    if mode == "h":
        return _sector_inner_h(n, kind, p, tol)
    if mode == "direct":
        return _sector_inner_direct(n, kind, p, tol)
    raise ValueError(f"mode must be 'h' or 'direct', got {mode!r}")


def _sector_inner_h(n: int, kind: str, p: ParamPoint, tol: float) -> QuadResult:
    k0, k1 = p.k0, p.k1
    d1, d2 = d_consts(p)
    htol = max(1e-11, tol * 1e-3)
    sub_tol = tol / 8.0
    if kind == "p12":
        power = 2 * n

        def smooth1(v: np.ndarray) -> np.ndarray:
            return (1.0 + v) ** (-power - 2) * _h_on_nodes(1, v, p, htol) ** 2

        def smooth2(v: np.ndarray) -> np.ndarray:
            return (1.0 + v) ** (-power - 2) * _h_on_nodes(2, v, p, htol) ** 2

        i1 = singular_integral(k1 + 0.5, power - 2 * k0, smooth1, sub_tol)
        i2 = singular_integral(-k1 - 0.5, power - 2 * k0, smooth2, sub_tol)
        coeff1 = 4.0 * d1 * ((1 + 2 * k0 + 2 * k1) / (1 + 2 * k1)) ** 2
        coeff2 = 4.0 * d2
        value = coeff1 * i1.value + coeff2 * i2.value
        err = abs(coeff1) * i1.error_estimate + abs(coeff2) * i2.error_estimate
        return QuadResult(value, err, i1.nodes + i2.nodes)

    power = 2 * n + 1

    def smooth3(v: np.ndarray) -> np.ndarray:
        return (
            (1.0 + v) ** (-power - 2)
            * _h_on_nodes(1, v, p, htol)
            * _h_on_nodes(3, v, p, htol)
        )

    def smooth4(v: np.ndarray) -> np.ndarray:
        return (
            (1.0 + v) ** (-power - 2)
            * _h_on_nodes(2, v, p, htol)
            * _h_on_nodes(4, v, p, htol)
        )

    j1 = singular_integral(k1 + 0.5, float(power), smooth3, sub_tol)
    j2 = singular_integral(-k1 - 0.5, float(power), smooth4, sub_tol)
    # signs fixed by expanding (L p14^T)^T diag(d) (L p12^T): the slot-1
    # product is +, the slot-2 product is -; at k = 0 this reduces to the
    # elementary value -1/2 of the first odd pairing, which pins them
    coeff1 = 4.0 * d1 * (1 - 2 * k0 + 2 * k1) * (1 + 2 * k0 + 2 * k1) / (1 + 2 * k1) ** 2
    coeff2 = -4.0 * d2
    value = coeff1 * j1.value + coeff2 * j2.value
    err = abs(coeff1) * j1.error_estimate + abs(coeff2) * j2.error_estimate
    return QuadResult(value, err, j1.nodes + j2.nodes)


def _sector_inner_direct(n: int, kind: str, p: ParamPoint, tol: float) -> QuadResult:
    d1, d2 = d_consts(p)
    diag = np.diag([d1, d2])
    phi_power = 2 * n if kind == "p12" else 2 * n + 1

    def integrand(frac: float, dist0: float, dist1: float) -> float:
        theta = _SECTOR * frac
        delta = _SECTOR * dist1
        if theta == 0.0 or delta == 0.0:
            return 0.0
        # slope and its complement without cancellation at either edge
        if dist1 < 0.5:
            td = math.tan(delta)
            u = (1.0 - td) / (1.0 + td)
        else:
            u = math.tan(theta)
        complement = math.sin(2.0 * delta) / math.cos(theta) ** 2
        ell = eval_L(u, p, tol=1e-11, u_sq_complement=complement)
        kmat = ell.T @ diag @ ell
        left = np.array([-math.sin(theta), math.cos(theta)])
        if kind == "p14":
            left = np.array([-math.sin(theta), -math.cos(theta)])
        right = np.array([-math.sin(theta), math.cos(theta)])
        phi = math.sin(2.0 * delta)  # equals cos(2 theta)
        return phi**phi_power * float(left @ kmat @ right)

    de = tanh_sinh(integrand, tol=tol)
    return QuadResult(8.0 * _SECTOR * de.value, 8.0 * _SECTOR * de.error_estimate, de.nodes)


# ---------------------------------------------------------------------------
# asymptotic integral comparison
# ---------------------------------------------------------------------------


def asym_integral_check(
    alpha: float,
    beta: float,
    gamma_exp: float,
    n: int,
    smooth: Callable[[float], float] | None = None,
) -> tuple[float, float]:
    """Integral int_0^1 t^alpha (1-t)^(n+gamma) (1+t)^(beta-n) g(t) dt versus
    its large-n asymptote (2n)^(-alpha-1) Gamma(alpha+1) g(0).

    Returns (numerical value, asymptote); their ratio tends to 1.  Requires
    alpha, gamma > -1 and n >= 2.  The substitution t = v/(2-v) turns the
    n-dependent factor into (1-v)^n, so the quadrature cost stays flat in n.
    """
    if alpha <= -1.0 or gamma_exp <= -1.0:
        raise RegionError("exponents alpha and gamma must exceed -1")
    if n < 2:
        raise ValueError("n must be at least 2")
    g = smooth if smooth is not None else (lambda _t: 1.0)
    residual_exp = -alpha - beta - gamma_exp - 2.0

    def transformed(v: np.ndarray) -> np.ndarray:
        t = v / (2.0 - v)
        return (1.0 - v / 2.0) ** residual_exp * np.array([g(ti) for ti in t])

    result = singular_integral(alpha, n + gamma_exp, transformed, tol=1e-12)
    numeric = 2.0 ** (-alpha - 1.0) * result.value
    asymptote = (2.0 * n) ** (-alpha - 1.0) * gamma_fn(alpha + 1.0) * g(0.0)
    return numeric, asymptote
