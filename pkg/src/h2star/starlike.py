"""Starlike functions of order alpha: Re(z f'(z) / f(z)) > alpha on |z| < 1.

Such f satisfy z f'(z) = [alpha + (1 - alpha) p(z)] f(z) for some p in the
Caratheodory class, which pins every Taylor coefficient of f to the moments
of p.  This module maps moment data to coefficient vectors, provides the
closed forms for a2, a3, a4, the extremal odd function z (1 - z^2)^(alpha - 1),
and rotation and membership utilities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .caratheodory import HerglotzAtoms, MomentTriple
from .errors import DomainError, InvalidRadius
from .series import TruncatedSeries, real_power
from . import series as _series

DEFAULT_MEMBERSHIP_RADIUS = 0.99
DEFAULT_MEMBERSHIP_SAMPLES = 720


@dataclass(frozen=True)
class Alpha:
    """Order parameter, restricted to [0, 1)."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not 0.0 <= v < 1.0:
            raise DomainError(f"alpha must lie in [0, 1), got {v}")
        object.__setattr__(self, "value", v)


class CoefficientVector:
    """Taylor coefficients a_1..a_N of a normalized function, a_1 = 1."""

    __slots__ = ("_a",)

    def __init__(self, coeffs):
        a = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if a.ndim != 1 or a.size < 1:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        if a[0] != 1:
            raise ValueError(f"a_1 must equal 1 exactly, got {a[0]}")
        a.setflags(write=False)
        self._a = a

    @property
    def coeffs(self) -> np.ndarray:
        return self._a

    def coeff(self, n: int) -> complex:
        """1-indexed accessor: coeff(n) is a_n."""
        if not 1 <= n <= self._a.size:
            raise IndexError(f"a_{n} not available, vector holds a_1..a_{self._a.size}")
        return complex(self._a[n - 1])

    def __len__(self) -> int:
        return self._a.size

    def __repr__(self) -> str:
        return f"CoefficientVector({self._a.tolist()!r})"


def coeffs_from_moments(alpha: Alpha, moments) -> CoefficientVector:
    """Coefficients a_1..a_N of f from moments p_1..p_{N-1}.

    Equating coefficients in z f' = [alpha + (1 - alpha) p] f gives

        a_n = (1 - alpha) / (n - 1) * sum_{k=1..n-1} a_{n-k} p_k,   a_1 = 1.
    """
    p = np.atleast_1d(np.asarray(moments, dtype=complex))
    n_max = p.size + 1
    a = np.zeros(n_max, dtype=complex)
    a[0] = 1.0
    s = 1.0 - alpha.value
    for n in range(2, n_max + 1):
        a[n - 1] = s / (n - 1) * np.dot(a[: n - 1][::-1], p[: n - 1])
    return CoefficientVector(a)


def closed_form_a234(alpha: Alpha, m: MomentTriple) -> tuple:
    """The closed forms of a2, a3, a4 in terms of (p1, p2, p3)."""
    al = alpha.value
    p1, p2, p3 = m.p1, m.p2, m.p3
    a2 = (1.0 - al) * p1
    a3 = 0.25 * (2.0 * (1.0 - al) ** 2 * p1 * p1 + 2.0 * p2 - 2.0 * al * p2)
    a4 = (1.0 - al) / 6.0 * ((1.0 - al) ** 2 * p1**3 + 3.0 * (1.0 - al) * p1 * p2 + 2.0 * p3)
    return a2, a3, a4


def extremal_coeffs(alpha: Alpha, order: int) -> CoefficientVector:
    """Coefficients of the extremal odd function z * (1 - z^2)^(alpha - 1).

    Even coefficients vanish; a_{2k+1} is the rising factorial
    (1 - alpha)(2 - alpha)...(k - alpha) divided by k!.  Same function as
    coeffs_from_moments applied to the moment pattern p_n = 1 + (-1)^n.
    """
    if order < 4:
        raise DomainError(f"need order >= 4, got {order}")
    a = np.zeros(order, dtype=complex)
    a[0] = 1.0
    coef = 1.0
    k = 1
    while 2 * k < order:
        coef *= (1.0 - alpha.value + (k - 1)) / k
        a[2 * k] = coef
        k += 1
    return CoefficientVector(a)


def extremal_series(alpha: Alpha, order: int = _series.DEFAULT_ORDER) -> TruncatedSeries:
    """The series route to the same function: z * (1 - z^2)^(alpha - 1)."""
    u = np.zeros(order + 1, dtype=complex)
    u[0] = 1.0
    if order >= 2:
        u[2] = -1.0
    v = real_power(TruncatedSeries(u), -(1.0 - alpha.value))
    return TruncatedSeries(np.concatenate(([0.0], v.coeffs[:order])))


def rotate_function(f: CoefficientVector, theta: float) -> CoefficientVector:
    """The rotation e^{-i theta} f(e^{i theta} z): a_n -> e^{i (n-1) theta} a_n."""
    return CoefficientVector(f.coeffs * np.exp(1j * theta * np.arange(len(f))))


def verify_membership(
    atoms: HerglotzAtoms,
    alpha: Alpha,
    radius: float = DEFAULT_MEMBERSHIP_RADIUS,
    samples: int = DEFAULT_MEMBERSHIP_SAMPLES,
) -> tuple:
    """Diagnostic margin of the defining inequality on the circle |z| = radius.

    Evaluates p exactly from its atoms at equispaced sample points and returns
    (min Re[alpha + (1 - alpha) p(z)] - alpha, margin > 0), which simplifies to
    (1 - alpha) * min Re p(z).  Sampling a circle is a diagnostic, not a proof;
    harmonicity makes the circle minimum the binding one at fixed radius.
    """
    if not 0.0 < radius < 1.0:
        raise InvalidRadius(f"radius must lie in (0, 1), got {radius}")
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    z = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
    eta = np.exp(1j * np.asarray(atoms.angles))
    w = np.asarray(atoms.weights)
    ez = np.outer(z, eta)
    p_vals = ((1.0 + ez) / (1.0 - ez)) @ w
    margin = (1.0 - alpha.value) * float(np.min(p_vals.real))
    return margin, margin > 0.0
