"""Derivative-free maximization of the determinant functional.

Three routes to the same maximum: the scalar majorant phi on its (p, t) box,
the five-term parameterized form over the full (p, y, zeta) box, and direct
search over genuine class members built from boundary atoms.  All searches
are deterministic: grids are fixed, random starts come from seeded
generators, and grid reductions use a max with lexicographic tie-break on
grid indices so that results do not depend on evaluation order or worker
count.  zeta is searched on the unit circle only; the functional is affine
in zeta, so the modulus over the closed disk is maximized on the boundary.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import hankel
from .caratheodory import HerglotzAtoms, LemmaPoint
from .errors import DomainError
from .formatting import fmt_complex, fmt_float
from .hankel import HankelSpec, hankel_det, sharp_bound
from .starlike import Alpha, coeffs_from_moments

TIE_TOL = 1e-12

_TWO_PI = 2.0 * math.pi
_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

DEFAULT_GRID_P = 201
DEFAULT_GRID_T = 101
DEFAULT_GRID_YARG = 64
DEFAULT_GRID_ZARG = 64

METHODS = ("phi", "lemma", "herglotz")


def _jsonify(value):
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_jsonify(v) for v in value]
    if isinstance(value, (complex, np.complexfloating)):
        z = complex(value)
        return [z.real, z.imag]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


@dataclass(frozen=True)
class SearchOutcome:
    """Result record: maximum found, where, how, and at what cost."""

    value: float
    argmax: dict
    method: str
    grid_spec: dict
    evaluations: int

    def to_dict(self) -> dict:
        return {
            "value": float(self.value),
            "argmax": _jsonify(self.argmax),
            "method": self.method,
            "grid_spec": _jsonify(self.grid_spec),
            "evaluations": int(self.evaluations),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    searched_max: float
    sharp_bound: float
    abs_gap: float
    argmax_summary: str


def _map_chunks(fn, items, workers: int):
    if workers <= 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _chunk_candidates(vals: np.ndarray, prefix: tuple):
    """Chunk maximum plus every index within TIE_TOL of it."""
    vmax = float(vals.max())
    idx = np.argwhere(vals >= vmax - TIE_TOL)
    cands = [
        (prefix + tuple(int(x) for x in row), float(vals[tuple(row)])) for row in idx
    ]
    return vmax, cands


def _reduce_candidates(results) -> tuple:
    """Lexicographically smallest index among values tied with the global max.

    Candidates tied with a chunk max are a superset of those tied with the
    global max, so this reduction is independent of how the grid was chunked.
    """
    global_max = max(vmax for vmax, _ in results)
    pool = [
        key
        for vmax, cands in results
        for key, val in cands
        if val >= global_max - TIE_TOL
    ]
    return min(pool)


def _golden_section_max(fn, lo: float, hi: float, tol: float = 1e-10, max_iter: int = 200):
    a, b = float(lo), float(hi)
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    evals = 2
    it = 0
    while (b - a) > tol and it < max_iter:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = fn(d)
        evals += 1
        it += 1
    if fc >= fd:
        return c, fc, evals
    return d, fd, evals


def maximize_phi(
    alpha: Alpha,
    grid_p: int = DEFAULT_GRID_P,
    grid_t: int = DEFAULT_GRID_T,
    workers: int = 1,
    seed=None,
) -> SearchOutcome:
    """Grid maximum of the majorant phi, plus one golden-section pass in p at t = 1.

    Ties are broken toward smallest p, then smallest t; the refinement only
    replaces the grid argmax if it improves by more than TIE_TOL.
    """
    if grid_p < 2 or grid_t < 2:
        raise DomainError(f"grids must have at least 2 points, got {grid_p} x {grid_t}")
    ps = np.linspace(0.0, 2.0, grid_p)
    ts = np.linspace(0.0, 1.0, grid_t)

    def eval_chunk(i):
        return _chunk_candidates(hankel.phi(alpha, ps[i], ts), (i,))

    results = _map_chunks(eval_chunk, range(grid_p), workers)
    pi, ti = _reduce_candidates(results)
    evaluations = grid_p * grid_t

    best_p, best_t = float(ps[pi]), float(ts[ti])
    value = hankel.phi(alpha, best_p, best_t)
    lo = float(ps[max(pi - 1, 0)])
    hi = float(ps[min(pi + 1, grid_p - 1)])
    x, fx, g_evals = _golden_section_max(lambda p: hankel.phi(alpha, p, 1.0), lo, hi)
    evaluations += g_evals
    if fx > value + TIE_TOL:
        best_p, best_t, value = float(x), 1.0, float(fx)

    return SearchOutcome(
        value=float(value),
        argmax={"p": best_p, "t": best_t},
        method="phi",
        grid_spec={"grid_p": grid_p, "grid_t": grid_t, "seed": seed},
        evaluations=evaluations,
    )


def maximize_param(
    alpha: Alpha,
    grid_p: int = DEFAULT_GRID_P,
    grid_ymod: int = DEFAULT_GRID_T,
    grid_yarg: int = DEFAULT_GRID_YARG,
    grid_zarg: int = DEFAULT_GRID_ZARG,
    workers: int = 1,
    seed=None,
) -> SearchOutcome:
    """Maximum of |five-term form| over p in [0,2], y = t e^{i mu}, zeta = e^{i nu}."""
    for name, g in (("grid_p", grid_p), ("grid_ymod", grid_ymod),
                    ("grid_yarg", grid_yarg), ("grid_zarg", grid_zarg)):
        if g < 2:
            raise DomainError(f"{name} must have at least 2 points, got {g}")
    ps = np.linspace(0.0, 2.0, grid_p)
    ts = np.linspace(0.0, 1.0, grid_ymod)
    e_mu = np.exp(1j * np.arange(grid_yarg) * (_TWO_PI / grid_yarg))
    e_nu = np.exp(1j * np.arange(grid_zarg) * (_TWO_PI / grid_zarg))
    y_grid = ts[:, None, None] * e_mu[None, :, None]
    zeta_grid = e_nu[None, None, :]

    def eval_chunk(i):
        vals = np.abs(hankel._param_form_raw(alpha.value, ps[i], y_grid, zeta_grid))
        return _chunk_candidates(vals, (i,))

    results = _map_chunks(eval_chunk, range(grid_p), workers)
    pi, ti, mi, ni = _reduce_candidates(results)
    pt = LemmaPoint(float(ps[pi]), complex(ts[ti] * e_mu[mi]), complex(e_nu[ni]))
    value = abs(hankel.functional_param_form(alpha, pt))

    return SearchOutcome(
        value=float(value),
        argmax={"p": pt.p, "y": pt.y, "zeta": pt.zeta},
        method="lemma",
        grid_spec={
            "grid_p": grid_p,
            "grid_ymod": grid_ymod,
            "grid_yarg": grid_yarg,
            "grid_zarg": grid_zarg,
            "seed": seed,
        },
        evaluations=grid_p * grid_ymod * grid_yarg * grid_zarg,
    )


def _refine_atoms(objective, weights, angles, sweeps: int):
    """Coordinate-wise pattern search with shrinking steps.

    Weights stay on the simplex by clipping at 0 and renormalizing after each
    probe; angles wrap mod 2 pi.  A probe is kept only if strictly better, so
    the value never decreases and the path is deterministic.
    """
    w = np.asarray(weights, dtype=float).copy()
    t = np.asarray(angles, dtype=float).copy()
    best = objective(w, t)
    evals = 1
    step_w, step_t = 0.15, 0.4
    for _ in range(sweeps):
        improved = False
        for i in range(w.size):
            for delta in (step_w, -step_w):
                trial = w.copy()
                trial[i] = max(0.0, trial[i] + delta)
                total = trial.sum()
                if total <= 0.0:
                    continue
                trial /= total
                val = objective(trial, t)
                evals += 1
                if val > best:
                    best, w, improved = val, trial, True
        for i in range(t.size):
            for delta in (step_t, -step_t):
                trial = t.copy()
                trial[i] = (trial[i] + delta) % _TWO_PI
                val = objective(w, trial)
                evals += 1
                if val > best:
                    best, t, improved = val, trial, True
        if not improved:
            step_w *= 0.5
            step_t *= 0.5
            if step_w < 1e-12 and step_t < 1e-12:
                break
    return best, w, t, evals


def maximize_herglotz(
    alpha: Alpha,
    atom_count: int = 2,
    restarts: int = 100,
    local_steps: int = 60,
    seed: int = 0,
    seed_atoms: HerglotzAtoms = None,
) -> SearchOutcome:
    """Random-restart search for |a2 a4 - a3^2| over genuine atom measures.

    Restart weights are Dirichlet(1) samples, angles uniform; each restart is
    refined coordinate-wise.  ``seed_atoms``, when given, contributes one
    plain evaluation ahead of the restarts, so seeding at a known maximizer
    reports its exact value.
    """
    if not 1 <= atom_count <= 4:
        raise DomainError(f"atom_count must lie in 1..4, got {atom_count}")
    if restarts < 0 or local_steps < 0:
        raise DomainError("restarts and local_steps must be nonnegative")
    if restarts == 0 and seed_atoms is None:
        raise DomainError("need restarts >= 1 or seed_atoms")
    rng = np.random.default_rng(seed)
    spec = HankelSpec(q=2, n=2)
    orders = np.array([1.0, 2.0, 3.0])

    def objective(w, t):
        moments = 2.0 * (np.exp(1j * np.outer(orders, t)) @ w)
        return abs(hankel_det(coeffs_from_moments(alpha, moments), spec))

    evaluations = 0
    best_val = -math.inf
    best_w = best_t = None
    if seed_atoms is not None:
        best_w = np.asarray(seed_atoms.weights, dtype=float)
        best_t = np.asarray(seed_atoms.angles, dtype=float)
        best_val = objective(best_w, best_t)
        evaluations += 1
    for _ in range(restarts):
        w0 = rng.dirichlet(np.ones(atom_count))
        t0 = rng.uniform(0.0, _TWO_PI, atom_count)
        val, w, t, n_evals = _refine_atoms(objective, w0, t0, local_steps)
        evaluations += n_evals
        if val > best_val:
            best_val, best_w, best_t = val, w, t

    return SearchOutcome(
        value=float(best_val),
        argmax={"weights": [float(x) for x in best_w],
                "angles": [float(x) for x in best_t]},
        method="herglotz",
        grid_spec={
            "atom_count": atom_count,
            "restarts": restarts,
            "local_steps": local_steps,
            "seed": seed,
        },
        evaluations=evaluations,
    )


def _summarize_argmax(outcome: SearchOutcome) -> str:
    """Compact single-field summary, free of commas for CSV stability."""
    parts = []
    for key, val in outcome.argmax.items():
        if isinstance(val, complex):
            parts.append(f"{key}={fmt_complex(val)}")
        elif isinstance(val, (list, tuple, np.ndarray)):
            parts.append(f"{key}=" + "|".join(fmt_float(x) for x in val))
        else:
            parts.append(f"{key}={fmt_float(val)}")
    return ";".join(parts)


def run_method(method: str, alpha: Alpha, workers: int = 1, seed: int = 0, **kwargs) -> SearchOutcome:
    """Dispatch one search by method name with default resolutions."""
    if method == "phi":
        return maximize_phi(alpha, workers=workers, seed=seed, **kwargs)
    if method == "lemma":
        return maximize_param(alpha, workers=workers, seed=seed, **kwargs)
    if method == "herglotz":
        return maximize_herglotz(alpha, seed=seed, **kwargs)
    raise DomainError(f"unknown method {method!r}, expected one of {METHODS}")


def sweep_alpha(
    alpha_start: float,
    alpha_end: float,
    steps: int,
    method: str,
    seed: int = 0,
    workers: int = 1,
    **method_kwargs,
):
    """Search at steps+1 equispaced alpha values and tabulate gaps to the bound."""
    if not 0.0 <= alpha_start < alpha_end < 1.0:
        raise DomainError(
            f"need 0 <= alpha_start < alpha_end < 1, got [{alpha_start}, {alpha_end}]"
        )
    if steps < 1:
        raise DomainError(f"need steps >= 1, got {steps}")
    rows = []
    for a in np.linspace(alpha_start, alpha_end, steps + 1):
        alpha = Alpha(float(a))
        outcome = run_method(method, alpha, workers=workers, seed=seed, **method_kwargs)
        bound = sharp_bound(alpha)
        rows.append(
            SweepRow(
                alpha=float(a),
                searched_max=float(outcome.value),
                sharp_bound=float(bound),
                abs_gap=abs(float(outcome.value) - float(bound)),
                argmax_summary=_summarize_argmax(outcome),
            )
        )
    return rows


def monotonicity_scan(alpha: Alpha, grid_p: int = 101, grid_t: int = 101):
    """Count adjacent t-grid drops of phi beyond 1e-12; contract is zero.

    Returns (violations, worst observed drop clipped at 0).
    """
    if grid_p < 3 or grid_t < 3:
        raise DomainError(f"grids must have at least 3 points, got {grid_p} x {grid_t}")
    ps = np.linspace(0.0, 2.0, grid_p)
    ts = np.linspace(0.0, 1.0, grid_t)
    vals = hankel.phi(alpha, ps[:, None], ts[None, :])
    drops = vals[:, :-1] - vals[:, 1:]
    violations = int(np.sum(drops > 1e-12))
    worst = float(max(float(drops.max()), 0.0))
    return violations, worst
