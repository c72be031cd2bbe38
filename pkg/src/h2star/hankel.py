"""Hankel determinants and the closed forms for the functional a2 a4 - a3^2.

For f in the starlike class of order alpha the functional reduces, via the
coefficient formulas, to the moment form

    L = (1 - alpha)^2 * [ -(1/12) (1 - alpha)^2 p1^4 - (1/4) p2^2 + (1/3) p1 p3 ]

and, after substituting the moment parameterization (p, y, zeta), to the
five-term form

    Psi = -(1/48) s2 c p^4 + (1/24) s2 p^2 q y - (1/12) s2 p^2 q y^2
          - (1/16) s2 q^2 y^2 + (1/6) s2 p q (1 - |y|^2) zeta,

with s2 = (1 - alpha)^2, c = 3 - 8 alpha + 4 alpha^2, q = 4 - p^2.  The
triangle inequality majorizes |Psi| by the polynomial phi(p, t) in t = |y|,
which is nondecreasing in t; at t = 1 it collapses to the profile

    B(p) = s2 * (1 - p^4/16 + |c| p^4/48),

whose maximum over p in [0, 2] is the sharp bound (1 - alpha)^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .caratheodory import LemmaPoint, MomentTriple
from .errors import DomainError, InsufficientCoefficients, UnsupportedOrder
from .starlike import Alpha, CoefficientVector

MAX_DET_ORDER = 6
_PIVOT_TOL = 1e-14


@dataclass(frozen=True)
class HankelSpec:
    """Order q and starting index n of a Hankel determinant."""

    q: int
    n: int

    def __post_init__(self):
        if int(self.q) < 1 or int(self.n) < 1:
            raise DomainError(f"need q >= 1 and n >= 1, got q={self.q}, n={self.n}")
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "n", int(self.n))

    @property
    def max_index(self) -> int:
        return self.n + 2 * self.q - 2


def hankel_det(f: CoefficientVector, spec: HankelSpec) -> complex:
    """Determinant of the q x q matrix M[i][j] = a_{n+i+j}.

    For q = 2, n = 2 this is a2 a4 - a3^2.  Small orders expand directly;
    orders 4..6 use Gaussian elimination with partial pivoting and a pivot
    threshold of 1e-14 (below it the determinant is reported as 0).
    """
    q, n = spec.q, spec.n
    if q > MAX_DET_ORDER:
        raise UnsupportedOrder(f"q = {q} exceeds the supported maximum {MAX_DET_ORDER}")
    if len(f) < spec.max_index:
        raise InsufficientCoefficients(
            f"need coefficients through a_{spec.max_index}, have a_1..a_{len(f)}"
        )
    a = f.coeffs

    def entry(i, j):
        return a[n + i + j - 1]

    if q == 1:
        return complex(entry(0, 0))
    if q == 2:
        return complex(entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0))
    m = np.array([[entry(i, j) for j in range(q)] for i in range(q)], dtype=complex)
    if q == 3:
        return complex(
            m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
        )
    return _det_partial_pivot(m)


def _det_partial_pivot(m: np.ndarray) -> complex:
    a = m.copy()
    size = a.shape[0]
    det = 1.0 + 0.0j
    for col in range(size):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[piv, col]) < _PIVOT_TOL:
            return 0.0 + 0.0j
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        det *= a[col, col]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= factors[:, None] * a[col, col:][None, :]
    return complex(det)


def functional_moment_form(alpha: Alpha, m: MomentTriple) -> complex:
    """a2 a4 - a3^2 written directly in the moments (p1, p2, p3)."""
    s2 = (1.0 - alpha.value) ** 2
    return complex(s2 * (-s2 * m.p1**4 / 12.0 - m.p2 * m.p2 / 4.0 + m.p1 * m.p3 / 3.0))


def _param_form_raw(alpha_value: float, p, y, zeta):
    """Five-term parameterized form; broadcast-safe over numpy arrays."""
    s2 = (1.0 - alpha_value) ** 2
    c = 3.0 - 8.0 * alpha_value + 4.0 * alpha_value * alpha_value
    q = 4.0 - p * p
    y_sq_mod = np.abs(y) ** 2
    return s2 * (
        -c * p**4 / 48.0
        + p * p * q * y / 24.0
        - p * p * q * y * y / 12.0
        - q * q * y * y / 16.0
        + p * q * (1.0 - y_sq_mod) * zeta / 6.0
    )


def functional_param_form(alpha: Alpha, pt: LemmaPoint) -> complex:
    """a2 a4 - a3^2 evaluated through the (p, y, zeta) parameterization."""
    return complex(_param_form_raw(alpha.value, pt.p, pt.y, pt.zeta))


def phi(alpha: Alpha, p, t):
    """Triangle-inequality majorant of |a2 a4 - a3^2| in (p, t = |y|).

    Accepts scalars or broadcastable numpy arrays with p in [0, 2] and
    t in [0, 1]; nonnegative on its domain and nondecreasing in t.
    """
    p_arr = np.asarray(p, dtype=float)
    t_arr = np.asarray(t, dtype=float)
    if np.any(p_arr < 0.0) or np.any(p_arr > 2.0):
        raise DomainError("p must lie in [0, 2]")
    if np.any(t_arr < 0.0) or np.any(t_arr > 1.0):
        raise DomainError("t must lie in [0, 1]")
    s2 = (1.0 - alpha.value) ** 2
    c = abs(3.0 - 8.0 * alpha.value + 4.0 * alpha.value**2)
    q = 4.0 - p_arr * p_arr
    val = s2 * (
        c * p_arr**4 / 48.0
        + p_arr**2 * q * t_arr / 24.0
        + p_arr**2 * q * t_arr**2 / 12.0
        + q * q * t_arr**2 / 16.0
        + p_arr * q * (1.0 - t_arr**2) / 6.0
    )
    return float(val) if val.ndim == 0 else val


def bound_profile(alpha: Alpha, p):
    """The majorant at t = 1, simplified: s2 * (1 - p^4/16 + |c| p^4/48).

    Its maximum over p in [0, 2] is the sharp bound; the absolute value on c
    folds the two sign cases of 3 - 8 alpha + 4 alpha^2 into one formula.
    """
    p_arr = np.asarray(p, dtype=float)
    if np.any(p_arr < 0.0) or np.any(p_arr > 2.0):
        raise DomainError("p must lie in [0, 2]")
    s2 = (1.0 - alpha.value) ** 2
    c = abs(3.0 - 8.0 * alpha.value + 4.0 * alpha.value**2)
    val = s2 * (1.0 - p_arr**4 / 16.0 + p_arr**4 * c / 48.0)
    return float(val) if val.ndim == 0 else val


def sharp_bound(alpha: Alpha) -> float:
    """The sharp bound (1 - alpha)^2 on |a2 a4 - a3^2| over the class."""
    return (1.0 - alpha.value) ** 2
