"""Parameter triples for positive-real-part functions and their coefficients.

The first three Taylor coefficients of any function ``p`` with ``p(0) = 1``
and positive real part are reachable from a triple ``(tau1, tau2, tau3)``
with ``tau1 in [0, 1]`` and ``tau2, tau3`` in the closed unit disk:

    c1 = 2 tau1
    c2 = 2 tau1^2 + 2 (1 - tau1^2) tau2
    c3 = 2 tau1^3 + 4 (1 - tau1^2) tau1 tau2 - 2 (1 - tau1^2) tau1 tau2^2
         + 2 (1 - tau1^2) (1 - |tau2|^2) tau3

On each boundary stratum the representing function is a unique rational
map, exposed here as a truncated series.  The bridge ``omega = (p-1)/(p+1)``
turns any such ``p`` into a Schwarz function.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number, Rational

from .series_engine import TruncatedSeries, series, series_div

TAU_BOUNDARY_TOL = 1e-12  # absorbs float rounding on |tau| = 1 only
COEFF_BOUND_TOL = 1e-9

__all__ = [
    "CaratheodoryPoint",
    "SchwarzCoeffs",
    "coeffs_from_point",
    "extremal_p_series",
    "schwarz_from_p",
    "mag_squared",
]


def mag_squared(x):
    """|x|^2 without a square root; exact for rational inputs."""
    return x.real * x.real + x.imag * x.imag


def _in_unit_disk(x) -> bool:
    return float(mag_squared(x)) <= (1.0 + TAU_BOUNDARY_TOL) ** 2


@dataclass(frozen=True)
class CaratheodoryPoint:
    """Parameter triple (tau1, tau2, tau3); boundary membership allowed."""

    tau1: float
    tau2: complex
    tau3: complex

    def __post_init__(self):
        t1 = self.tau1
        if isinstance(t1, complex) or not isinstance(t1, Number):
            raise ValueError("tau1 must be real")
        if not 0 <= t1 <= 1:
            raise ValueError(f"tau1 must lie in [0, 1], got {t1}")
        for name in ("tau2", "tau3"):
            val = getattr(self, name)
            if not isinstance(val, Number):
                raise ValueError(f"{name} must be a number")
            if not _in_unit_disk(val):
                raise ValueError(f"|{name}| must be <= 1, got {val!r}")


@dataclass(frozen=True)
class SchwarzCoeffs:
    """Initial coefficients c1..c4 of a positive-real-part function.

    c2..c4 may be absent (None); every present coefficient obeys the class
    bound |c| <= 2 up to float rounding.
    """

    c1: complex
    c2: complex | None = None
    c3: complex | None = None
    c4: complex | None = None

    def __post_init__(self):
        for name in ("c1", "c2", "c3", "c4"):
            val = getattr(self, name)
            if val is None:
                continue
            if not isinstance(val, Number):
                raise ValueError(f"{name} must be a number")
            if float(mag_squared(val)) > (2.0 + COEFF_BOUND_TOL) ** 2:
                raise ValueError(f"|{name}| must be <= 2, got {val!r}")


def coeffs_from_point(pt: CaratheodoryPoint) -> SchwarzCoeffs:
    """Map a parameter triple to (c1, c2, c3); exact over rational inputs."""
    t1, t2, t3 = pt.tau1, pt.tau2, pt.tau3
    u = 1 - t1 * t1
    c1 = 2 * t1
    c2 = 2 * t1 * t1 + 2 * u * t2
    c3 = 2 * t1 ** 3 + 4 * u * t1 * t2 - 2 * u * t1 * t2 * t2 \
        + 2 * u * (1 - mag_squared(t2)) * t3
    return SchwarzCoeffs(c1, c2, c3)


def _on_circle(x) -> bool:
    return abs(float(mag_squared(x)) - 1.0) <= 3 * TAU_BOUNDARY_TOL


def extremal_p_series(pt: CaratheodoryPoint, order: int) -> TruncatedSeries:
    """Series of the unique representing function for a boundary triple.

    The triple must sit on one of the three extremal strata: tau1 = 1, or
    |tau2| = 1 with tau1 < 1, or |tau3| = 1 with tau1, |tau2| < 1.  Interior
    triples have no unique representative and are rejected.
    """
    t1 = complex(pt.tau1)
    t2 = complex(pt.tau2)
    t3 = complex(pt.tau3)
    if _on_circle(pt.tau1):
        num = [1, t1]
        den = [1, -t1]
    elif _on_circle(t2):
        num = [1, t1.conjugate() * t2 + t1, t2]
        den = [1, t1.conjugate() * t2 - t1, -t2]
    elif _on_circle(t3):
        num = [
            1,
            t2.conjugate() * t3 + t1.conjugate() * t2 + t1,
            t1.conjugate() * t3 + t1 * t2.conjugate() * t3 + t2,
            t3,
        ]
        den = [
            1,
            t2.conjugate() * t3 + t1.conjugate() * t2 - t1,
            t1.conjugate() * t3 - t1 * t2.conjugate() * t3 - t2,
            -t3,
        ]
    else:
        raise ValueError(
            "no unique representing function: the triple lies in the interior of every stratum"
        )
    return series_div(series(num, order=order), series(den, order=order))


def schwarz_from_p(p: TruncatedSeries) -> TruncatedSeries:
    """The Schwarz bridge ``omega = (p - 1)/(p + 1)`` as a series.

    The first coefficients come out as

        omega1 = c1/2
        omega2 = (c2 - c1^2/2)/2
        omega3 = (c3 - c1 c2 + c1^3/4)/2
        omega4 = (c4 - c1 c3 + 3 c1^2 c2 / 4 - c2^2/2 - c1^4/8)/2
    """
    if p.coeffs[0] != 1:
        raise ValueError("schwarz_from_p requires constant term 1")
    return series_div(p - 1, p + 1)
