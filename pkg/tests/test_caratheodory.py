"""Parameter triples, coefficient map, extremal representatives, Schwarz bridge."""

import math
from fractions import Fraction as F

import numpy as np
import pytest

from coeffsharp.caratheodory import (
    CaratheodoryPoint,
    SchwarzCoeffs,
    coeffs_from_point,
    extremal_p_series,
    schwarz_from_p,
)
from coeffsharp.series_engine import monomial, series, series_div


# --- domain types ---------------------------------------------------------------

def test_point_accepts_boundary():
    CaratheodoryPoint(1.0, 1.0, -1.0)
    CaratheodoryPoint(F(0), complex(0, 1), complex(-1, 0))


def test_point_rejects_bad_tau1():
    with pytest.raises(ValueError):
        CaratheodoryPoint(1.5, 0, 0)
    with pytest.raises(ValueError):
        CaratheodoryPoint(-0.1, 0, 0)
    with pytest.raises(ValueError):
        CaratheodoryPoint(0.5 + 0.1j, 0, 0)


def test_point_rejects_outside_disk():
    with pytest.raises(ValueError):
        CaratheodoryPoint(0.5, 1.0 + 1e-6, 0)
    with pytest.raises(ValueError):
        CaratheodoryPoint(0.5, 0, complex(0.8, 0.8))


def test_coeffs_reject_oversized():
    with pytest.raises(ValueError):
        SchwarzCoeffs(2.1)
    with pytest.raises(ValueError):
        SchwarzCoeffs(0, 0, 0, complex(1.5, 1.5))


# --- coefficient map -------------------------------------------------------------

def test_coeffs_at_tau1_equal_one():
    c = coeffs_from_point(CaratheodoryPoint(F(1), 0.3 + 0.1j, -0.7j))
    assert (c.c1, c.c2, c.c3) == (2, 2, 2)


def test_coeffs_at_second_extremal_point():
    c = coeffs_from_point(CaratheodoryPoint(F(0), F(1), F(1, 2)))
    assert (c.c1, c.c2, c.c3) == (0, 2, 0)


def test_coeffs_at_inverse_hankel_witness():
    t = math.sqrt(2 / 11)
    c = coeffs_from_point(CaratheodoryPoint(t, 1.0, 1.0))
    assert c.c1 == pytest.approx(2 * t, abs=1e-15)
    assert c.c2 == pytest.approx(2.0, abs=1e-15)
    assert c.c3 == pytest.approx(2 * t, abs=1e-14)


def test_range_check_100k_samples():
    # |c_i| <= 2 across the whole parameter box
    rng = np.random.default_rng(20240211)
    n = 100_000
    t1 = rng.uniform(0.0, 1.0, n)
    t2 = rng.uniform(0.0, 1.0, n) * np.exp(1j * rng.uniform(0, 2 * np.pi, n))
    t3 = rng.uniform(0.0, 1.0, n) * np.exp(1j * rng.uniform(0, 2 * np.pi, n))
    for i in range(n):
        c = coeffs_from_point(CaratheodoryPoint(t1[i], t2[i], t3[i]))
        assert abs(c.c1) <= 2 + 1e-9
        assert abs(c.c2) <= 2 + 1e-9
        assert abs(c.c3) <= 2 + 1e-9


# --- extremal representing functions ----------------------------------------------

def test_extremal_series_half_plane():
    p = extremal_p_series(CaratheodoryPoint(1.0, 0.0, 0.0), 5)
    assert np.allclose(p.coeffs, [1, 2, 2, 2, 2, 2])


def test_extremal_series_z_squared_stratum():
    p = extremal_p_series(CaratheodoryPoint(0.0, 1.0, 0.0), 6)
    assert np.allclose(p.coeffs, [1, 0, 2, 0, 2, 0, 2])


def test_extremal_series_surd_stratum():
    t = math.sqrt(2 / 11)
    p = extremal_p_series(CaratheodoryPoint(t, 1.0, 0.0), 5)
    assert np.allclose(p.coeffs, [1, 2 * t, 2, 2 * t, 2, 2 * t])


def test_extremal_series_rejects_interior():
    with pytest.raises(ValueError):
        extremal_p_series(CaratheodoryPoint(0.5, 0.5, 0.5), 4)


@pytest.mark.parametrize("pt", [
    CaratheodoryPoint(1.0, 0.3 + 0.4j, 0.2),
    CaratheodoryPoint(0.3, np.exp(0.7j), 0.1 - 0.2j),
    CaratheodoryPoint(0.0, 1.0, 0.9),
    CaratheodoryPoint(0.6, 0.2 - 0.5j, np.exp(2.1j)),
    CaratheodoryPoint(0.0, 0.0, -1.0),
])
def test_extremal_series_consistent_with_coefficient_map(pt):
    p = extremal_p_series(pt, 6)
    c = coeffs_from_point(pt)
    assert p.coeffs[1] == pytest.approx(c.c1, abs=1e-12)
    assert p.coeffs[2] == pytest.approx(c.c2, abs=1e-12)
    assert p.coeffs[3] == pytest.approx(c.c3, abs=1e-12)


# --- Schwarz bridge -----------------------------------------------------------------

def test_schwarz_of_half_plane_map():
    p = series([1] + [2] * 6)
    om = schwarz_from_p(p)
    assert om.coeffs == monomial(1, 6).coeffs


def test_schwarz_of_z_squared_map():
    p = series([1, 0, 2, 0, 2, 0, 2])
    om = schwarz_from_p(p)
    assert om.coeffs == monomial(2, 6).coeffs


def test_schwarz_of_linear_p():
    om = schwarz_from_p(series([1, 2, 0, 0, 0]))
    assert om.coeffs == tuple(F(v) for v in (0, 1, -1, 1, -1))


def test_schwarz_rejects_wrong_constant():
    with pytest.raises(ValueError):
        schwarz_from_p(series([2, 1]))


def test_schwarz_displayed_coefficients():
    rng = np.random.default_rng(7)
    for _ in range(50):
        c = rng.uniform(-1, 1, 8)
        c1, c2, c3, c4 = (complex(c[2 * i], c[2 * i + 1]) for i in range(4))
        p = series([1, c1, c2, c3, c4], order=6)
        om = schwarz_from_p(p)
        assert om.coeffs[0] == 0
        assert om.coeffs[1] == pytest.approx(c1 / 2, abs=1e-13)
        assert om.coeffs[2] == pytest.approx((c2 - c1 ** 2 / 2) / 2, abs=1e-13)
        assert om.coeffs[3] == pytest.approx((c3 - c1 * c2 + c1 ** 3 / 4) / 2, abs=1e-13)
        expected4 = (c4 - c1 * c3 + 3 * c1 ** 2 * c2 / 4 - c2 ** 2 / 2 - c1 ** 4 / 8) / 2
        assert om.coeffs[4] == pytest.approx(expected4, abs=1e-13)


@pytest.mark.parametrize("pt", [
    CaratheodoryPoint(1.0, 0.0, 0.0),
    CaratheodoryPoint(0.4, np.exp(1.3j), 0.0),
    CaratheodoryPoint(0.0, 1.0, 0.0),
    CaratheodoryPoint(0.2, 0.5j, np.exp(0.4j)),
    CaratheodoryPoint(0.7, -0.3, -1.0),
])
def test_schwarz_bridge_admissible_near_boundary(pt):
    # omega(0) = 0 and |omega| < 1 on |z| = 0.99; the order is taken high
    # enough that the truncation tail on that circle stays below 1e-3.
    om = schwarz_from_p(extremal_p_series(pt, 1200))
    assert om.coeffs[0] == 0
    for k in range(16):
        z = 0.99 * np.exp(2j * np.pi * k / 16)
        assert abs(om.evaluate(z)) < 1.0
