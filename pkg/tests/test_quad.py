"""Quadrature engine self-tests and the numeric route to the pairings."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from b2weight.errors import RegionError
from b2weight.hyper import gamma_fn, s_inner_closed
from b2weight.quad import (
    QuadResult,
    asym_integral_check,
    sector_inner_numeric,
    singular_integral,
    tanh_sinh,
)
from b2weight.ring import poly_eval
from b2weight.weight import ParamPoint


def const_one(v):
    return np.ones_like(v)


def test_beta_integral_halves():
    res = singular_integral(-0.5, -0.5, const_one, tol=1e-12)
    assert abs(res.value - math.pi) <= 1e-12
    assert res.error_estimate >= 0 and res.nodes >= 1


def test_beta_integral_unit():
    res = singular_integral(0.0, 0.0, const_one, tol=1e-12)
    assert abs(res.value - 1.0) <= 1e-13


def test_beta_integral_generic_exponents():
    res = singular_integral(0.3, -0.4, const_one, tol=1e-12)
    expected = gamma_fn(1.3) * gamma_fn(0.6) / gamma_fn(1.9)
    assert abs(res.value - expected) <= 1e-12


def test_singular_integral_polynomial_smooth():
    # v^0.5 (1-v)^0.25 * v -> Beta(2.5, 1.25)
    res = singular_integral(0.5, 0.25, lambda v: v, tol=1e-12)
    expected = gamma_fn(2.5) * gamma_fn(1.25) / gamma_fn(3.75)
    assert abs(res.value - expected) <= 1e-12


def test_singular_integral_rejects_bad_exponents():
    with pytest.raises(RegionError):
        singular_integral(-1.0, 0.0, const_one)
    with pytest.raises(RegionError):
        singular_integral(0.0, -1.5, const_one)


def test_tanh_sinh_handles_endpoint_singularities():
    # int_0^1 v^(-1/2) (1-v)^(-1/2) dv = pi via the distance arguments
    def f(_v, d0, d1):
        return 1.0 / math.sqrt(d0 * d1)

    res = tanh_sinh(f, tol=1e-12)
    assert abs(res.value - math.pi) <= 1e-11
    assert isinstance(res, QuadResult)


ACCEPTANCE_POINTS = [(0.3, 0.1), (-0.2, 0.25), (0.1, -0.3), (0.45, 0.0), (0.0, 0.45)]


def exact_pairing(n: int, kind: str, k0: str, k1: str) -> float:
    return float(poly_eval(s_inner_closed(n, kind), Fraction(k0), Fraction(k1)))


def test_sector_pairing_wallis_values():
    p = ParamPoint(0.0, 0.0)
    got = sector_inner_numeric(0, "p12", p, tol=1e-10)
    assert abs(got.value - 1.0) <= 1e-9
    got = sector_inner_numeric(1, "p12", p, tol=1e-10)
    assert abs(got.value - 0.5) <= 1e-9


def test_sector_pairing_seed_value():
    got = sector_inner_numeric(0, "p12", ParamPoint(0.3, 0.1), tol=1e-9)
    assert got.value == pytest.approx(1.8, abs=1e-8)


def test_sector_pairing_matches_closed_form_spot():
    p = ParamPoint(-0.2, 0.25)
    for n in (0, 2):
        for kind in ("p12", "p14"):
            got = sector_inner_numeric(n, kind, p, tol=1e-9)
            want = exact_pairing(n, kind, "-0.2", "0.25")
            assert got.value == pytest.approx(want, rel=1e-8)


def test_sector_pairing_routes_agree():
    for k0, k1 in ((0.3, 0.1), (-0.2, 0.25)):
        p = ParamPoint(k0, k1)
        for n in (0, 1):
            for kind in ("p12", "p14"):
                h_route = sector_inner_numeric(n, kind, p, tol=1e-9, mode="h")
                direct = sector_inner_numeric(n, kind, p, tol=1e-9, mode="direct")
                combined = h_route.error_estimate + direct.error_estimate + 1e-10
                assert abs(h_route.value - direct.value) <= combined


def test_sector_pairing_odd_kind_is_negative():
    # leading sign of the odd pairing for k1 >= 0 at small n
    for k0, k1 in ((0.3, 0.1), (0.0, 0.45), (-0.2, 0.25)):
        p = ParamPoint(k0, k1)
        for n in (0, 1, 2):
            assert sector_inner_numeric(n, "p14", p, tol=1e-8).value < 0


def test_sector_pairing_region_and_argument_checks():
    with pytest.raises(RegionError):
        sector_inner_numeric(0, "p12", ParamPoint(0.3, 0.3))
    with pytest.raises(ValueError):
        sector_inner_numeric(0, "p13", ParamPoint(0.1, 0.1))
    with pytest.raises(ValueError):
        sector_inner_numeric(-1, "p12", ParamPoint(0.1, 0.1))
    with pytest.raises(ValueError):
        sector_inner_numeric(0, "p12", ParamPoint(0.1, 0.1), mode="bogus")


def test_asym_integral_plain_ratio():
    # int_0^1 ((1-t)/(1+t))^n dt against 1/(2n)
    num, asym = asym_integral_check(0.0, 0.0, 0.0, 200)
    assert abs(num / asym - 1.0) < 0.01
    num_50, asym_50 = asym_integral_check(0.0, 0.0, 0.0, 50)
    assert abs(num / asym - 1.0) < abs(num_50 / asym_50 - 1.0)


def test_asym_integral_smooth_factor_uses_origin_value():
    # g(t) = 1 + t contributes g(0) = 1: same asymptote as without it
    num, asym = asym_integral_check(0.3, -0.2, 0.15, 400, smooth=lambda t: 1.0 + t)
    assert abs(num / asym - 1.0) < 0.01
    _, asym_plain = asym_integral_check(0.3, -0.2, 0.15, 400)
    assert asym == asym_plain


def test_asym_integral_argument_checks():
    with pytest.raises(RegionError):
        asym_integral_check(-1.2, 0.0, 0.0, 10)
    with pytest.raises(ValueError):
        asym_integral_check(0.0, 0.0, 0.0, 1)
