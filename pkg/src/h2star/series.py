"""Truncated power-series arithmetic over complex coefficients.

A series is a finite coefficient vector c0..cN standing for sum c_n z^n.
Mixed-order arithmetic truncates to the shorter operand, which matches the
usual truncation semantics of formal power series.  All coefficients are
complex doubles; orders in this toolkit stay small (default 16).
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByNonUnit, NonUnitConstant

DEFAULT_ORDER = 16

_UNIT_TOL = 1e-14


class TruncatedSeries:
    """Coefficients c0..cN of a power series truncated at order N."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        c.setflags(write=False)
        self._coeffs = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __getitem__(self, n: int) -> complex:
        return complex(self._coeffs[n])

    def __repr__(self) -> str:
        return f"TruncatedSeries({self._coeffs.tolist()!r})"


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the shorter operand's order."""
    n = min(a.order, b.order)
    c = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1]
    return TruncatedSeries(c)


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Series quotient a/b by long division.

    Requires |b0| > 1e-14; the result q satisfies mul(q, b) = a up to the
    common order (within rounding, which grows as b0 shrinks).
    """
    b0 = complex(b.coeffs[0])
    if abs(b0) <= _UNIT_TOL:
        raise DivisionByNonUnit(f"constant term {b0} too small to divide by")
    n = min(a.order, b.order)
    q = np.zeros(n + 1, dtype=complex)
    for k in range(n + 1):
        q[k] = (a.coeffs[k] - np.dot(b.coeffs[1 : k + 1], q[:k][::-1])) / b0
    return TruncatedSeries(q)


def real_power(u: TruncatedSeries, beta: float) -> TruncatedSeries:
    """u**beta for a series with constant term exactly 1.

    Uses the standard coefficient recurrence obtained from u * v' = beta * u' * v:

        n * v_n = sum_{k=1..n} (k*(beta+1) - n) * u_k * v_{n-k},   v_0 = 1.
    """
    c = u.coeffs
    if c[0] != 1:
        raise NonUnitConstant(f"constant term must be exactly 1, got {c[0]}")
    n = u.order
    v = np.zeros(n + 1, dtype=complex)
    v[0] = 1.0
    for m in range(1, n + 1):
        ks = np.arange(1, m + 1)
        v[m] = np.dot((ks * (beta + 1.0) - m) * c[1 : m + 1], v[:m][::-1]) / m
    return TruncatedSeries(v)


def z_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """The operator z * d/dz: coefficient n maps to n * f_n."""
    return TruncatedSeries(np.arange(f.order + 1) * f.coeffs)
