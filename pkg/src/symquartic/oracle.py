"""Floating-point falsifier used to cross-check exact verdicts.

Homogeneity lets us search a compact slice: the cube surface max(|x|,|y|,|z|) = 1
for real variables, the simplex x + y + z = 1 on the orthant.  Stratified
random samples seed a projected-gradient descent from the best candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .forms import Domain, QuarticForm, evaluate

LIKELY_HOLDS = "LikelyHolds"
LIKELY_FAILS = "LikelyFails"

N_SEEDS = 32
DESCENT_STEPS = 120
DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 10, 20, 50, 100, 1000, 10**4, 10**5, 10**6)


@dataclass(frozen=True)
class OracleReport:
    min_estimate: float
    argmin: tuple[float, float, float]
    samples: int
    verdict_hint: str
    tolerance: float

    @property
    def likely_fails(self) -> bool:
        return self.verdict_hint == LIKELY_FAILS


def _coeffs(form: QuarticForm) -> tuple[float, float, float]:
    return float(form.a), float(form.b), float(form.c)


def f_values(abc, pts: np.ndarray) -> np.ndarray:
    a, b, c = abc
    x, y, z = pts[..., 0], pts[..., 1], pts[..., 2]
    x2, y2, z2 = x * x, y * y, z * z
    w4 = x2 * x2 + y2 * y2 + z2 * z2
    w3 = x2 * x * (y + z) + y2 * y * (z + x) + z2 * z * (x + y)
    w2 = x2 * y2 + y2 * z2 + z2 * x2
    w1 = x * y * z * (x + y + z)
    return w4 + a * w3 + b * w2 + c * w1


def f_gradients(abc, pts: np.ndarray) -> np.ndarray:
    a, b, c = abc
    cols = [pts[..., i] for i in range(3)]
    sq = [u * u for u in cols]
    s = cols[0] + cols[1] + cols[2]
    out = np.empty_like(pts)
    for i in range(3):
        u, v, w = cols[i], cols[(i + 1) % 3], cols[(i + 2) % 3]
        u2, v2, w2 = sq[i], sq[(i + 1) % 3], sq[(i + 2) % 3]
        out[..., i] = (4 * u2 * u + a * (3 * u2 * (v + w) + v2 * v + w2 * w)
                       + 2 * b * u * (v2 + w2) + c * v * w * (s + u))
    return out


def _project_simplex(p: np.ndarray) -> np.ndarray:
    """Euclidean projection of each row onto {x >= 0, sum x = 1}."""
    n = p.shape[1]
    srt = -np.sort(-p, axis=1)
    css = np.cumsum(srt, axis=1) - 1.0
    idx = np.arange(1, n + 1)
    cond = srt - css / idx > 0
    rho = n - 1 - np.argmax(cond[:, ::-1], axis=1)
    theta = css[np.arange(len(p)), rho] / (rho + 1)
    return np.maximum(p - theta[:, None], 0.0)


def _sample_reals(rng, budget: int) -> tuple[np.ndarray, np.ndarray]:
    special = np.array([[1, 1, 1], [1, 1, -1], [1, 0, 0], [1, 1, 0], [1, -1, 0],
                        [1, 1, -0.5], [1, -1, -1]], dtype=float)
    n = max(budget - len(special), 0)
    pts = rng.uniform(-1.0, 1.0, size=(n, 3))
    face = np.arange(n) % 6
    axis = face % 3
    pts[np.arange(n), axis] = np.where(face < 3, 1.0, -1.0)
    pts = np.vstack([special[: budget], pts])[:budget]
    fixed = np.argmax(np.abs(pts), axis=1)
    return pts, fixed


def _sample_simplex(rng, budget: int) -> np.ndarray:
    special = np.array([[1, 0, 0], [0.5, 0.5, 0], [1 / 3, 1 / 3, 1 / 3]], dtype=float)
    n = max(budget - len(special), 0)
    pts = rng.dirichlet(np.ones(3), size=n)
    return np.vstack([special[:budget], pts])[:budget]


def _descend(abc, pts, project, steps: int) -> tuple[np.ndarray, np.ndarray]:
    vals = f_values(abc, pts)
    scale = 1.0 + sum(abs(v) for v in abc)
    lr = np.full(len(pts), 1.0 / (16.0 * scale))
    checkpoint = vals.min()
    for step in range(1, steps + 1):
        grad = f_gradients(abc, pts)
        cand = project(pts - lr[:, None] * grad)
        cv = f_values(abc, cand)
        better = cv < vals
        pts = np.where(better[:, None], cand, pts)
        vals = np.where(better, cv, vals)
        lr = np.where(better, lr * 1.2, lr * 0.5)
        if step % 10 == 0:
            cur = vals.min()
            if checkpoint - cur < 1e-13 * scale:
                break
            checkpoint = cur
    return pts, vals


def numeric_min(form: QuarticForm, budget: int = 10_000, seed: int = 0,
                steps: int = DESCENT_STEPS) -> OracleReport:
    """Estimate min f on the normalized slice of the form's domain."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = np.random.default_rng(seed)
    abc = _coeffs(form)
    if form.domain is Domain.REALS:
        pts, fixed = _sample_reals(rng, budget)
    else:
        pts = _sample_simplex(rng, budget)
    vals = f_values(abc, pts)
    k = min(N_SEEDS, len(pts))
    best = np.argpartition(vals, k - 1)[:k] if k < len(pts) else np.arange(k)
    best = best[np.argsort(vals[best], kind="stable")]
    seeds = pts[best]
    if form.domain is Domain.REALS:
        fix = fixed[best]
        anchor = seeds[np.arange(k), fix].copy()

        def project(p):
            p = np.clip(p, -1.0, 1.0)
            p[np.arange(k), fix] = anchor
            return p
    else:
        project = _project_simplex
    seeds, svals = _descend(abc, seeds, project, steps)
    i = int(np.argmin(svals))
    arg = seeds[i]
    arg = arg / np.max(np.abs(arg))
    m = float(f_values(abc, arg[None, :])[0])
    tol = 1e-10 * (1.0 + sum(abs(v) for v in abc))
    hint = LIKELY_FAILS if m < -tol else LIKELY_HOLDS
    return OracleReport(m, (float(arg[0]), float(arg[1]), float(arg[2])), len(pts), hint, tol)


def rationalize(point, max_denominator: int) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(Fraction(float(v)).limit_denominator(max_denominator) for v in point)


def find_counterexample(form: QuarticForm, budget: int = 10_000, seed: int = 0,
                        report: Optional[OracleReport] = None):
    """Exact rational point with f < 0 near the numeric minimizer, or None."""
    report = report or numeric_min(form, budget, seed)
    if not report.likely_fails:
        return None
    for d in DENOMINATORS:
        pt = rationalize(report.argmin, d)
        if form.domain is Domain.NONNEG and min(pt) < 0:
            continue
        if evaluate(form, *pt) < 0:
            return pt
    return None
