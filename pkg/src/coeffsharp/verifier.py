"""Deterministic global search certifying each sharp bound.

Every target scans the full grid over (tau1, |tau2|, arg tau2, |tau3|,
arg tau3) -- with the dimensions its functional does not read pinned to 0 --
then refines a shrinking window around the incumbent.  Radius grids always
contain r = 1 and angle grids always contain 0, so boundary extrema are
exact grid members.  Scans are pure and deterministic; the tau1 loop of the
three-parameter targets optionally fans out over threads (capped by the
COEFFSHARP_THREADS environment variable) with a fixed-order reduction, so
results are bit-identical either way.
"""

from __future__ import annotations

import math
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._search import window_grid
from .caratheodory import CaratheodoryPoint, coeffs_from_point
from .functionals import FunctionalValue, evaluate_functional

THEOREM_IDS = (
    "gamma1",
    "gamma2",
    "gamma3",
    "H21_log",
    "Gamma1",
    "Gamma2",
    "H21_inverse",
    "diff_gamma_upper",
    "diff_gamma_lower",
    "diff_Gamma_upper",
    "diff_Gamma_lower",
)

__all__ = [
    "THEOREM_IDS",
    "Bound",
    "SearchConfig",
    "VerificationReport",
    "objective_slice",
    "verify",
    "verify_all",
    "sharpness_witness",
]


@dataclass(frozen=True)
class Bound:
    """Theoretical sharp constant: exact expression plus float value."""

    expr: str
    value: float
    direction: str  # "max": supremum target; "min": infimum target


@dataclass(frozen=True)
class SearchConfig:
    grid_tau1: int = 101
    grid_r: int = 21
    grid_theta: int = 72
    refinement_rounds: int = 6
    shrink_factor: float = 0.35
    tolerance_attain: float = 1e-4
    tolerance_exceed: float = 1e-9

    def __post_init__(self):
        for name in ("grid_tau1", "grid_r", "grid_theta"):
            if getattr(self, name) < 2:
                raise ValueError(f"{name} must be >= 2")
        if self.refinement_rounds < 0:
            raise ValueError("refinement_rounds must be >= 0")
        if not 0 < self.shrink_factor < 1:
            raise ValueError("shrink_factor must lie in (0, 1)")
        if not self.tolerance_exceed <= 1e-9 <= self.tolerance_attain:
            raise ValueError("need tolerance_exceed <= 1e-9 <= tolerance_attain")


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    bound: Bound
    empirical_extremum: float
    maximizer: CaratheodoryPoint
    gap: float
    evaluations: int
    passed: bool


# --- vectorized objectives -------------------------------------------------
# Each objective returns the quantity being MAXIMIZED (minimum targets are
# searched on the negated signed value).  tau2/tau3 enter as flat complex
# grids; tau1 broadcasts as a column for the two-parameter targets.  The
# three-parameter functionals are affine in tau3 with a real weight, so they
# are described by (head(tau1, tau2), weight(tau1, tau2), scale) and the
# objective matrix is |head + weight * tau3| * scale.

def _c12(t1, tau2):
    c1 = 2.0 * t1
    u = 1.0 - t1 * t1
    c2 = 2.0 * t1 * t1 + 2.0 * u * tau2
    return c1, c2, u


def _obj_gamma1(t1):
    return np.abs(2.0 * t1) / 4.0


def _obj_gamma2(t1, tau2):
    c1, c2, _ = _c12(t1, tau2)
    return np.abs(c2 - c1 * c1 / 4.0) / 8.0


def _obj_Gamma2(t1, tau2):
    c1, c2, _ = _c12(t1, tau2)
    return np.abs(c2 - 1.25 * c1 * c1) / 8.0


def _obj_diff_gamma(t1, tau2, sign):
    c1, c2, _ = _c12(t1, tau2)
    return sign * (np.abs(-c1 * c1 / 32.0 + c2 / 8.0) - np.abs(c1) / 4.0)


def _obj_diff_Gamma(t1, tau2, sign):
    c1, c2, _ = _c12(t1, tau2)
    return sign * (np.abs(5.0 * c1 * c1 / 32.0 - c2 / 8.0) - np.abs(c1) / 4.0)


def _tau3_weight(t1, tau2):
    return 1.0 - (tau2.real ** 2 + tau2.imag ** 2)


def _parts_gamma3(t1, tau2):
    c1, c2, u = _c12(t1, tau2)
    base3 = 2.0 * t1 ** 3 + 4.0 * u * t1 * tau2 - 2.0 * u * t1 * tau2 * tau2
    return base3 - c1 * c2 / 2.0, 2.0 * u * _tau3_weight(t1, tau2), 1.0 / 12.0


def _hankel_head(t1, tau2, quartic, quad_tau2):
    u = 1.0 - t1 * t1
    return (
        quartic * t1 ** 4
        + quad_tau2 * t1 * t1 * tau2 * u
        - 4.0 * tau2 * tau2 * (3.0 + t1 * t1) * u
    )


def _parts_h21_log(t1, tau2):
    w = 16.0 * t1 * (1.0 - t1 * t1) * _tau3_weight(t1, tau2)
    return _hankel_head(t1, tau2, -3.0, 4.0), w, 1.0 / 192.0


def _parts_h21_inverse(t1, tau2):
    w = 16.0 * t1 * (1.0 - t1 * t1) * _tau3_weight(t1, tau2)
    return _hankel_head(t1, tau2, 9.0, -20.0), w, 1.0 / 192.0


def _affine_matrix(parts, t1, tau2, tau3):
    head, w, scale = parts(float(t1), np.asarray(tau2, dtype=complex))
    return np.abs(head[:, None] + w[:, None] * np.asarray(tau3)[None, :]) * scale


@dataclass(frozen=True)
class _Target:
    dims: int  # 1, 2 or 3 active tau parameters
    sign: float  # +1 maximize, -1 minimize the signed value
    bound: Bound
    objective: object  # dims 1/2: objective array; dims 3: (head, weight, scale)


_SQRT6 = math.sqrt(6.0)
_SQRT10 = math.sqrt(10.0)

_TARGETS = {
    "gamma1": _Target(1, 1.0, Bound("1/2", 0.5, "max"), _obj_gamma1),
    "gamma2": _Target(2, 1.0, Bound("1/4", 0.25, "max"), _obj_gamma2),
    "gamma3": _Target(3, 1.0, Bound("1/6", 1.0 / 6.0, "max"), _parts_gamma3),
    "H21_log": _Target(3, 1.0, Bound("1/16", 0.0625, "max"), _parts_h21_log),
    "Gamma1": _Target(1, 1.0, Bound("1/2", 0.5, "max"), _obj_gamma1),
    "Gamma2": _Target(2, 1.0, Bound("3/8", 0.375, "max"), _obj_Gamma2),
    "H21_inverse": _Target(3, 1.0, Bound("3/44", 3.0 / 44.0, "max"), _parts_h21_inverse),
    "diff_gamma_upper": _Target(2, 1.0, Bound("1/4", 0.25, "max"),
                                lambda t1, tau2: _obj_diff_gamma(t1, tau2, 1.0)),
    "diff_gamma_lower": _Target(2, -1.0, Bound("-1/sqrt(6)", -1.0 / _SQRT6, "min"),
                                lambda t1, tau2: _obj_diff_gamma(t1, tau2, -1.0)),
    "diff_Gamma_upper": _Target(2, 1.0, Bound("1/4", 0.25, "max"),
                                lambda t1, tau2: _obj_diff_Gamma(t1, tau2, 1.0)),
    "diff_Gamma_lower": _Target(2, -1.0, Bound("-1/sqrt(10)", -1.0 / _SQRT10, "min"),
                                lambda t1, tau2: _obj_diff_Gamma(t1, tau2, -1.0)),
}

# |Gamma1| = |gamma1| = |c1|/4, but the two theorems are reported separately.


def objective_slice(theorem_id: str, t1: float, tau2: np.ndarray | None = None,
                    tau3: np.ndarray | None = None) -> np.ndarray:
    """Evaluate one target's search objective on a tau1 slice.

    For three-parameter targets pass flat complex ``tau2`` and ``tau3`` grids
    and get the (len(tau2), len(tau3)) objective matrix; two-parameter
    targets ignore ``tau3``; one-parameter targets ignore both.
    """
    target = _TARGETS[theorem_id]
    if target.dims == 1:
        return np.asarray(target.objective(np.asarray(t1, dtype=float)))
    if target.dims == 2:
        return np.asarray(target.objective(float(t1), np.asarray(tau2)))
    return _affine_matrix(target.objective, t1, tau2, tau3)


def _max_workers() -> int:
    raw = os.environ.get("COEFFSHARP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _polar(rs, ths):
    return (rs[:, None] * np.exp(1j * ths)[None, :]).ravel()


@dataclass
class _Incumbent:
    value: float
    t1: float
    r2: float
    th2: float
    r3: float
    th3: float


def _scan1(obj, t1s):
    vals = obj(t1s)
    i = int(np.argmax(vals))
    return _Incumbent(float(vals[i]), float(t1s[i]), 0.0, 0.0, 0.0, 0.0), vals.size


def _scan2(obj, t1s, rs, ths):
    tau2 = _polar(rs, ths)
    vals = obj(t1s[:, None], tau2[None, :])
    flat = int(np.argmax(vals))
    i1, i2 = divmod(flat, tau2.size)
    ir, ith = divmod(i2, ths.size)
    inc = _Incumbent(float(vals.flat[flat]), float(t1s[i1]),
                     float(rs[ir]), float(ths[ith]), 0.0, 0.0)
    return inc, vals.size


def _scan3(parts, t1s, rs2, ths2, rs3, ths3):
    tau2 = _polar(rs2, ths2)
    tau3 = _polar(rs3, ths3)
    t3r, t3i = tau3.real[None, :].copy(), tau3.imag[None, :].copy()
    shape = (tau2.size, tau3.size)
    buffers = threading.local()

    def one_slice(t1):
        # |head + w*tau3| maximized on squared magnitudes in real arithmetic,
        # on preallocated per-thread scratch to keep the loop allocation-free
        if getattr(buffers, "shape", None) != shape:
            buffers.shape = shape
            buffers.xr, buffers.xi, buffers.m2 = (np.empty(shape) for _ in range(3))
        xr, xi, m2 = buffers.xr, buffers.xi, buffers.m2
        head, w, scale = parts(float(t1), tau2)
        wc = w[:, None]
        np.multiply(wc, t3r, out=xr)
        xr += head.real[:, None]
        np.multiply(wc, t3i, out=xi)
        xi += head.imag[:, None]
        np.multiply(xr, xr, out=m2)
        np.multiply(xi, xi, out=xi)
        m2 += xi
        flat = int(np.argmax(m2))
        return math.sqrt(float(m2.flat[flat])) * scale, flat

    workers = _max_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one_slice, t1s))
    else:
        results = [one_slice(t1) for t1 in t1s]

    best_i1 = max(range(len(results)), key=lambda i: results[i][0])
    value, flat = results[best_i1]
    i2, i3 = divmod(flat, tau3.size)
    ir2, ith2 = divmod(i2, ths2.size)
    ir3, ith3 = divmod(i3, ths3.size)
    inc = _Incumbent(value, float(t1s[best_i1]), float(rs2[ir2]), float(ths2[ith2]),
                     float(rs3[ir3]), float(ths3[ith3]))
    return inc, tau2.size * tau3.size * len(t1s)


def _initial_axes(cfg: SearchConfig):
    t1s = np.linspace(0.0, 1.0, cfg.grid_tau1)
    rs = np.linspace(0.0, 1.0, cfg.grid_r)
    ths = np.linspace(0.0, 2.0 * np.pi, cfg.grid_theta, endpoint=False)
    return t1s, rs, ths


def _refined_axes(inc: _Incumbent, cfg: SearchConfig, round_no: int, dims: int):
    w = cfg.shrink_factor ** round_no
    t1s = window_grid(inc.t1, w, cfg.grid_tau1, 0.0, 1.0)
    if dims == 1:
        return (t1s,)
    rs2 = window_grid(inc.r2, w, cfg.grid_r, 0.0, 1.0)
    ths2 = window_grid(inc.th2, 2.0 * np.pi * w, cfg.grid_theta)
    if dims == 2:
        return t1s, rs2, ths2
    rs3 = window_grid(inc.r3, w, cfg.grid_r, 0.0, 1.0)
    ths3 = window_grid(inc.th3, 2.0 * np.pi * w, cfg.grid_theta)
    return t1s, rs2, ths2, rs3, ths3


def _search(target: _Target, cfg: SearchConfig):
    scan = {1: _scan1, 2: _scan2, 3: _scan3}[target.dims]
    t1s, rs, ths = _initial_axes(cfg)
    axes = {1: (t1s,), 2: (t1s, rs, ths), 3: (t1s, rs, ths, rs, ths)}[target.dims]
    incumbent, evals = scan(target.objective, *axes)
    for k in range(1, cfg.refinement_rounds + 1):
        cand, n = scan(target.objective, *_refined_axes(incumbent, cfg, k, target.dims))
        evals += n
        if cand.value > incumbent.value:
            incumbent = cand
    return incumbent, evals


def _point_of(inc: _Incumbent) -> CaratheodoryPoint:
    tau2 = inc.r2 * complex(math.cos(inc.th2), math.sin(inc.th2))
    tau3 = inc.r3 * complex(math.cos(inc.th3), math.sin(inc.th3))
    return CaratheodoryPoint(inc.t1, tau2, tau3)


def verify(theorem_id: str, cfg: SearchConfig = SearchConfig()) -> VerificationReport:
    """Search one target's full domain and report attainment and soundness.

    An exceeded bound comes back as a failed report, never an exception.
    """
    if theorem_id not in _TARGETS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    target = _TARGETS[theorem_id]
    incumbent, evals = _search(target, cfg)
    empirical = target.sign * incumbent.value
    if target.bound.direction == "max":
        gap = target.bound.value - empirical
    else:
        gap = empirical - target.bound.value
    passed = -cfg.tolerance_exceed <= gap <= cfg.tolerance_attain
    return VerificationReport(
        theorem_id=theorem_id,
        bound=target.bound,
        empirical_extremum=empirical,
        maximizer=_point_of(incumbent),
        gap=gap,
        evaluations=evals,
        passed=passed,
    )


def verify_all(cfg: SearchConfig = SearchConfig()) -> list[VerificationReport]:
    """Run every target in canonical order; deterministic given the config."""
    return [verify(theorem_id, cfg) for theorem_id in THEOREM_IDS]


# --- sharpness witnesses ----------------------------------------------------

_F0, _F1 = Fraction(0), Fraction(1)
_WITNESS = {
    "gamma1": ("gamma1", (_F1, _F0, _F0)),
    "gamma2": ("gamma2", (_F0, _F1, _F0)),
    "gamma3": ("gamma3", (_F0, _F0, _F1)),
    "H21_log": ("H21_log", (_F0, _F1, _F0)),
    "Gamma1": ("Gamma1", (_F1, _F0, _F0)),
    "Gamma2": ("Gamma2", (_F1, _F0, _F0)),
    "H21_inverse": ("H21_log_inverse", (math.sqrt(2.0 / 11.0), 1.0, 1.0)),
    "diff_gamma_upper": ("diff_gamma", (_F0, _F1, _F0)),
    "diff_gamma_lower": ("diff_gamma", (math.sqrt(2.0 / 3.0), -1.0, 0.0)),
    "diff_Gamma_upper": ("diff_Gamma", (_F0, _F1, _F0)),
    "diff_Gamma_lower": ("diff_Gamma", (math.sqrt(2.0 / 5.0), 1.0, 0.0)),
}


def sharpness_witness(theorem_id: str) -> tuple[CaratheodoryPoint, FunctionalValue]:
    """The exact extremal parameter triple of a target and its value there.

    Witnesses with rational coordinates evaluate exactly; the surd-coordinate
    ones land within float rounding of their algebraic constants.
    """
    if theorem_id not in _WITNESS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    functional, taus = _WITNESS[theorem_id]
    pt = CaratheodoryPoint(*taus)
    value = evaluate_functional(functional, coeffs_from_point(pt))
    return pt, value
