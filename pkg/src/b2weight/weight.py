"""The 2x2 matrix weight on the open sector 0 < theta < pi/4.

The weight is assembled as K = L^T diag(d1, d2) L from a lower-level matrix
L(u) of hypergeometric entries in the slope u = x2/x1 and two parameter
constants d1, d2.  It is homogeneous of degree zero, so a point on the unit
circle (equivalently, the angle theta with u = tan theta) carries all the
information; values elsewhere in the plane follow from the group action and
are intentionally not computed here.

Two parameter regions matter:

* integrable:         |k0| < 1/2 and |k1| < 1/2
* positive definite:  -1/2 < k0 + k1 < 1/2 and -1/2 < k0 - k1 < 1/2

The flags are computed from the point, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RegionError
from .hyper import gamma_fn, gauss_2f1, h_func

_HALF_SECTOR = math.pi / 4


@dataclass(frozen=True)
class ParamPoint:
    """A parameter pair with its region flags."""

    k0: float
    k1: float

    @property
    def integrable(self) -> bool:
        return abs(self.k0) < 0.5 and abs(self.k1) < 0.5

    @property
    def positive_definite(self) -> bool:
        return abs(self.k0 + self.k1) < 0.5 and abs(self.k0 - self.k1) < 0.5


@dataclass(frozen=True)
class WeightEval:
    """One weight evaluation: slope, factor matrix, assembled matrix, constants."""

    u: float
    L: np.ndarray
    K: np.ndarray
    d1: float
    d2: float

    @property
    def det_k(self) -> float:
        return float(self.K[0, 0] * self.K[1, 1] - self.K[0, 1] * self.K[1, 0])


def c_norm(p: ParamPoint) -> float:
    """The normalization constant cos(pi k0) cos(pi k1) / (2 pi)."""
    if not p.integrable:
        raise RegionError(f"normalization needs |k0|, |k1| < 1/2; got {p}")
    return math.cos(math.pi * p.k0) * math.cos(math.pi * p.k1) / (2.0 * math.pi)


def d_consts(p: ParamPoint) -> tuple[float, float]:
    """The two diagonal constants entering K = L^T diag(d1, d2) L."""
    if not p.positive_definite:
        raise RegionError(f"diagonal constants need the positive-definite region; got {p}")
    c = c_norm(p)
    k0, k1 = p.k0, p.k1
    cos0 = math.cos(math.pi * k0)
    d1 = c * gamma_fn(0.5 - k1) ** 2 / (
        cos0 * gamma_fn(0.5 + k0 - k1) * gamma_fn(0.5 - k0 - k1)
    )
    d2 = c * gamma_fn(0.5 + k1) ** 2 / (
        cos0 * gamma_fn(0.5 + k0 + k1) * gamma_fn(0.5 - k0 + k1)
    )
    return d1, d2


def eval_L(
    u: float,
    p: ParamPoint,
    tol: float = 1e-11,
    u_sq_complement: float | None = None,
) -> np.ndarray:
    """The four hypergeometric entries of L(u) on the open slope range (0, 1).

    ``u_sq_complement`` may pass 1 - u^2 computed to better accuracy than the
    subtraction (useful when u is extremely close to 1).
    """
    if u_sq_complement is None:
        if not 0.0 < u < 1.0:
            raise RegionError(f"eval_L requires 0 < u < 1, got u = {u}")
        w = 1.0 - u * u
    else:
        # the supplied complement is authoritative; u itself may have rounded
        # to 1.0 when the slope is within machine epsilon of the sector edge
        w = u_sq_complement
        if not (0.0 < u <= 1.0 and 0.0 < w <= 1.0):
            raise RegionError("eval_L requires 0 < u <= 1 with 0 < 1-u^2 <= 1")
    if not p.integrable:
        raise RegionError(f"eval_L needs the integrable region; got {p}")
    k0, k1 = p.k0, p.k1
    z = u * u if w >= 0.5 else 1.0 - w
    log_u = math.log(u) if w >= 0.5 else 0.5 * math.log1p(-w)
    up = math.exp(k1 * log_u)
    um = math.exp(-k1 * log_u)
    pref = math.exp(-k0 * math.log(w))

    f11 = gauss_2f1(-k0, 0.5 - k0 + k1, k1 + 0.5, z, tol, z_complement=w).value
    f22 = gauss_2f1(-k0, 0.5 - k0 - k1, 0.5 - k1, z, tol, z_complement=w).value
    ell = np.empty((2, 2))
    ell[0, 0] = up * pref * f11
    ell[1, 1] = um * pref * f22
    if k0 == 0.0:
        ell[0, 1] = 0.0
        ell[1, 0] = 0.0
    else:
        f12 = gauss_2f1(1 - k0, 0.5 - k0 + k1, k1 + 1.5, z, tol, z_complement=w).value
        f21 = gauss_2f1(1 - k0, 0.5 - k0 - k1, 1.5 - k1, z, tol, z_complement=w).value
        ell[0, 1] = -(k0 / (k1 + 0.5)) * up * pref * u * f12
        ell[1, 0] = -(k0 / (0.5 - k1)) * um * pref * u * f21
    return ell


def eval_K(theta: float, p: ParamPoint) -> WeightEval:
    """Assemble the weight matrix at the circle point with angle theta."""
    if not 0.0 < theta < _HALF_SECTOR:
        raise RegionError(f"eval_K requires 0 < theta < pi/4, got {theta}")
    u = math.tan(theta)
    # cos(2 theta) / cos(theta)^2 keeps 1 - u^2 accurate near the sector edge
    complement = math.cos(2.0 * theta) / math.cos(theta) ** 2
    ell = eval_L(u, p, u_sq_complement=complement)
    d1, d2 = d_consts(p)
    kmat = ell.T @ np.diag([d1, d2]) @ ell
    return WeightEval(u=u, L=ell, K=kmat, d1=d1, d2=d2)


@dataclass(frozen=True)
class ComboForms:
    """The four slope combinations of L entries, computed two ways.

    Order: (x2 L11 - x1 L12, x1 L22 - x2 L21, -x2 L11 - x1 L12,
    -x2 L21 - x1 L22).  ``from_entries`` assembles them from eval_L;
    ``factored`` uses the equivalent single-series product forms.  The two
    must agree to roundoff, which pins the contiguous-series reductions.
    """

    from_entries: tuple[float, float, float, float]
    factored: tuple[float, float, float, float]


def combo_forms(u: float, p: ParamPoint, tol: float = 1e-11) -> ComboForms:
    if not 0.0 < u < 1.0:
        raise RegionError(f"combo_forms requires 0 < u < 1, got u = {u}")
    k0, k1 = p.k0, p.k1
    z = u * u
    w = 1.0 - z
    norm = math.sqrt(1.0 + z)
    x1 = 1.0 / norm
    x2 = u / norm

    ell = eval_L(u, p, tol=tol)
    from_entries = (
        x2 * ell[0, 0] - x1 * ell[0, 1],
        x1 * ell[1, 1] - x2 * ell[1, 0],
        -x2 * ell[0, 0] - x1 * ell[0, 1],
        -x2 * ell[1, 0] - x1 * ell[1, 1],
    )

    minus = w**-k0 / norm
    plus = w**k0 / norm
    factored = (
        u ** (k1 + 1) * minus * (1 + 2 * k0 + 2 * k1) / (1 + 2 * k1)
        * h_func(1, z, k0, k1, tol).value,
        u**-k1 * minus * h_func(2, z, k0, k1, tol).value,
        -(u ** (k1 + 1)) * plus * (1 - 2 * k0 + 2 * k1) / (1 + 2 * k1)
        * h_func(3, z, k0, k1, tol).value,
        -(u**-k1) * plus * h_func(4, z, k0, k1, tol).value,
    )
    return ComboForms(from_entries=from_entries, factored=factored)


def det_k_closed_form(p: ParamPoint) -> float:
    """cos(pi (k0+k1)) cos(pi (k0-k1)) / (4 pi^2), constant over the sector."""
    return (
        math.cos(math.pi * (p.k0 + p.k1))
        * math.cos(math.pi * (p.k0 - p.k1))
        / (4.0 * math.pi**2)
    )
