"""Degree-capped formal power series over exact rationals or complex doubles.

A :class:`TruncatedSeries` stores the coefficients of ``z**0 .. z**N`` and
every operation truncates its result back to degree ``N`` (the smaller ``N``
when two orders meet).  A series is homogeneous in one scalar mode:

* ``"rational"`` -- ``fractions.Fraction`` coefficients, arithmetic is exact
  and no rounding ever happens;
* ``"complex"``  -- complex doubles, NaN/Inf are rejected at construction.

Series of different modes never combine.  All values are immutable; every
operation is a pure function.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number, Rational

RATIONAL = "rational"
COMPLEX = "complex"

__all__ = [
    "RATIONAL",
    "COMPLEX",
    "TruncatedSeries",
    "series",
    "monomial",
    "antiderivative_over_t",
    "compose",
    "cosh_series",
    "exp_series",
    "extremal_function",
    "log_series",
    "series_div",
    "starlike_from_schwarz",
]


def _coerce(value, mode: str):
    if mode == RATIONAL:
        if isinstance(value, Rational):
            return Fraction(value)
        raise ValueError(
            f"rational-mode series cannot hold {value!r}; build the series in complex mode"
        )
    z = complex(value)
    if not cmath.isfinite(z):
        raise ValueError("complex-mode coefficients must be finite")
    return z


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series truncated at a fixed degree.

    ``coeffs[k]`` is the coefficient of ``z**k``; ``len(coeffs) == order + 1``.
    Use :func:`series` or :func:`monomial` to build instances from plain
    numbers.

    >>> f = series([1, 1]) * series([1, -1])
    >>> f.coeffs
    (Fraction(1, 1), Fraction(0, 1))
    """

    coeffs: tuple
    mode: str

    def __post_init__(self):
        if self.mode not in (RATIONAL, COMPLEX):
            raise ValueError(f"unknown scalar mode {self.mode!r}")
        if not self.coeffs:
            raise ValueError("a series needs at least the degree-0 coefficient")
        want = Fraction if self.mode == RATIONAL else complex
        for c in self.coeffs:
            if not isinstance(c, want):
                raise ValueError(f"{self.mode}-mode series holds foreign scalar {c!r}")
            if want is complex and not cmath.isfinite(c):
                raise ValueError("complex-mode coefficients must be finite")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        """Coefficient of ``z**k``; ``k`` must not exceed the order."""
        if not 0 <= k <= self.order:
            raise IndexError(f"degree {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop all coefficients above ``order``."""
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], self.mode)

    def extended(self, order: int) -> "TruncatedSeries":
        """Reinterpret the series as a polynomial of higher truncation order."""
        if order < self.order:
            raise ValueError("extended() cannot lower the order; use truncate()")
        pad = (_coerce(0, self.mode),) * (order - self.order)
        return TruncatedSeries(self.coeffs + pad, self.mode)

    def evaluate(self, z):
        """Horner evaluation of the truncated polynomial at a scalar point."""
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * z + c
        return acc

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            _check_modes(self, other)
            n = min(self.order, other.order)
            return TruncatedSeries(
                tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])),
                self.mode,
            )
        if isinstance(other, Number):
            val = _coerce(other, self.mode)
            return TruncatedSeries((self.coeffs[0] + val,) + self.coeffs[1:], self.mode)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.mode)

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, Number)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Number):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            _check_modes(self, other)
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = []
            for k in range(n + 1):
                out.append(sum((a[i] * b[k - i] for i in range(k + 1)), _coerce(0, self.mode)))
            return TruncatedSeries(tuple(out), self.mode)
        if isinstance(other, Number):
            val = _coerce(other, self.mode)
            return TruncatedSeries(tuple(c * val for c in self.coeffs), self.mode)
        return NotImplemented

    __rmul__ = __mul__


def _check_modes(a: TruncatedSeries, b: TruncatedSeries):
    if a.mode != b.mode:
        raise ValueError(f"scalar modes differ: {a.mode} vs {b.mode}")


def series(values, order: int | None = None, mode: str | None = None) -> TruncatedSeries:
    """Build a series from plain numbers.

    The mode is inferred (rational unless a float/complex appears) when not
    given.  With ``order`` set, short coefficient lists pad with zeros and
    long ones truncate.
    """
    vals = list(values)
    if not vals and order is None:
        raise ValueError("empty coefficient list")
    if mode is None:
        mode = RATIONAL if all(isinstance(v, Rational) for v in vals) else COMPLEX
    if order is not None:
        if order < 0:
            raise ValueError("order must be >= 0")
        vals = vals[: order + 1] + [0] * (order + 1 - len(vals))
    return TruncatedSeries(tuple(_coerce(v, mode) for v in vals), mode)


def monomial(degree: int, order: int | None = None, mode: str = RATIONAL,
             coefficient=1) -> TruncatedSeries:
    """The series ``coefficient * z**degree`` truncated at ``order``."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if order is None:
        order = degree
    if order < degree:
        raise ValueError(f"order {order} cannot hold degree-{degree} monomial")
    vals = [0] * (order + 1)
    vals[degree] = coefficient
    return series(vals, mode=mode)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))`` truncated to the smaller order.

    The inner series must vanish at 0; composing at a unit is out of
    contract.  Evaluated by Horner's rule in the series ring.

    >>> compose(series([1, 1, 1]), monomial(1, 2)).coeffs
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))
    """
    _check_modes(outer, inner)
    if inner.coeffs[0] != 0:
        raise ValueError("composition requires the inner series to vanish at 0")
    n = min(outer.order, inner.order)
    o = outer.truncate(n)
    i = inner.truncate(n)
    acc = series([o.coeffs[n]], order=n, mode=outer.mode)
    for k in range(n - 1, -1, -1):
        acc = acc * i + o.coeffs[k]
    return acc


def exp_series(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a)`` for a series with zero constant term.

    Computed through the recurrence ``(exp a)' = a' * exp a`` with unit
    constant term, so rational mode stays exact.
    """
    if a.coeffs[0] != 0:
        raise ValueError("exp_series requires a zero constant term")
    n = a.order
    out = [_coerce(1, a.mode)]
    for k in range(1, n + 1):
        acc = _coerce(0, a.mode)
        for j in range(1, k + 1):
            acc += j * a.coeffs[j] * out[k - j]
        out.append(acc / k)
    return TruncatedSeries(tuple(out), a.mode)


def log_series(a: TruncatedSeries) -> TruncatedSeries:
    """``log(a)`` for a series with constant term 1, via ``(log a)' = a'/a``."""
    if a.coeffs[0] != 1:
        raise ValueError("log_series requires constant term 1")
    n = a.order
    out = [_coerce(0, a.mode)]
    for k in range(1, n + 1):
        acc = _coerce(0, a.mode)
        for j in range(1, k):
            acc += j * out[j] * a.coeffs[k - j]
        out.append(a.coeffs[k] - acc / k)
    return TruncatedSeries(tuple(out), a.mode)


def cosh_series(a: TruncatedSeries) -> TruncatedSeries:
    """``(exp(a) + exp(-a)) / 2`` for a series with zero constant term."""
    if a.coeffs[0] != 0:
        raise ValueError("cosh_series requires a zero constant term")
    half = Fraction(1, 2) if a.mode == RATIONAL else 0.5
    return (exp_series(a) + exp_series(-a)) * half


def antiderivative_over_t(a: TruncatedSeries) -> TruncatedSeries:
    """Integrate ``a(t)/t`` from 0: coefficient ``k`` is divided by ``k``.

    The constant term must vanish; a nonzero one would create a log
    singularity at the origin.  The order is preserved.
    """
    if a.coeffs[0] != 0:
        raise ValueError("antiderivative_over_t requires a zero constant term")
    out = [_coerce(0, a.mode)]
    for k in range(1, a.order + 1):
        out.append(a.coeffs[k] / k)
    return TruncatedSeries(tuple(out), a.mode)


def divide_by_z(a: TruncatedSeries) -> TruncatedSeries:
    """``a(z)/z`` for a series vanishing at 0; the order drops by one."""
    if a.coeffs[0] != 0:
        raise ValueError("divide_by_z requires a zero constant term")
    if a.order == 0:
        raise ValueError("cannot drop the only coefficient")
    return TruncatedSeries(a.coeffs[1:], a.mode)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """``a / b`` truncated to the smaller order; ``b`` must be a unit."""
    _check_modes(a, b)
    if b.coeffs[0] == 0:
        raise ValueError("series division requires a nonzero constant term in the divisor")
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = a.coeffs[k]
        for j in range(1, k + 1):
            acc -= b.coeffs[j] * out[k - j]
        out.append(acc / b.coeffs[0])
    return TruncatedSeries(tuple(out), a.mode)


def _growth_integrand(omega: TruncatedSeries) -> TruncatedSeries:
    # omega + cosh(omega) - 1: the driver of the logarithmic derivative,
    # shifted so the constant term vanishes.
    return omega + cosh_series(omega) - 1


def starlike_from_schwarz(omega: TruncatedSeries, order: int) -> TruncatedSeries:
    """Solve ``z f'(z)/f(z) = omega(z) + cosh(omega(z))`` for ``f``.

    Returns ``f(z) = z * exp( integral of (omega(t) + cosh(omega(t)) - 1)/t )``
    truncated at ``order``.  ``omega`` is treated as a polynomial: missing
    high-degree coefficients count as zero.
    """
    if omega.coeffs[0] != 0:
        raise ValueError("a Schwarz series must vanish at 0")
    om = omega.extended(order) if omega.order < order else omega.truncate(order)
    s = antiderivative_over_t(_growth_integrand(om))
    return monomial(1, order, mode=om.mode) * exp_series(s)


def extremal_function(n: int, order: int) -> TruncatedSeries:
    """The bound-attaining function driven by ``omega(z) = z**n``, exactly.

    >>> extremal_function(2, 5).coeffs[3]
    Fraction(1, 2)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if order < n + 1:
        raise ValueError(f"order must be >= {n + 1} to show the first correction")
    return starlike_from_schwarz(monomial(n, order), order)
