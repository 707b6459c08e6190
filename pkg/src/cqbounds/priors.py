"""Maximization of prior-dependent objectives over the probability simplex.

Objectives take a ``(G, q)`` array of candidate priors and return ``G`` values,
so a whole simplex grid is evaluated in one batched call.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar

Objective = Callable[[np.ndarray], np.ndarray]

GRID_DENOMINATOR = 64
MAX_GRID_POINTS = 200_000


def simplex_grid(q: int, k: int) -> np.ndarray:
    """All priors with entries in ``{0, 1/k, ..., 1}`` (stars and bars)."""
    rows = []
    for bars in itertools.combinations(range(k + q - 1), q - 1):
        edges = (-1,) + bars + (k + q - 1,)
        rows.append([edges[i + 1] - edges[i] - 1 for i in range(q)])
    return np.array(rows, dtype=float) / k


def _grid_denominator(q: int) -> int:
    k = GRID_DENOMINATOR
    while k > 2 and comb(k + q - 1, q - 1) > MAX_GRID_POINTS:
        k //= 2
    return k


def scalar_max(f: Callable[[float], float], lo: float, hi: float, xtol: float) -> tuple[float, float]:
    if hi - lo <= xtol:
        return f(lo), lo
    res = minimize_scalar(lambda t: -f(t), bounds=(lo, hi), method="bounded", options={"xatol": xtol})
    best = (-float(res.fun), float(res.x))
    for t in (lo, hi):
        v = f(t)
        if v > best[0]:
            best = (v, t)
    return best


def maximize_over_priors(objective: Objective, q: int, xtol: float = 1e-10, max_sweeps: int = 50) -> tuple[float, np.ndarray]:
    """Return ``(max value, argmax prior)``.

    Binary alphabets use a bounded Brent search on ``p``. Larger alphabets
    start from the best point of a simplex grid and refine by exchanging mass
    between coordinate pairs until no pair improves.
    """
    if q == 2:
        value, p = scalar_max(lambda t: float(objective(np.array([[t, 1.0 - t]]))[0]), 0.0, 1.0, xtol)
        return value, np.array([p, 1.0 - p])

    grid = simplex_grid(q, _grid_denominator(q))
    values = objective(grid)
    i = int(np.argmax(values))
    best, prior = float(values[i]), grid[i].copy()

    for _ in range(max_sweeps):
        start = best
        for i, j in itertools.combinations(range(q), 2):
            base = prior.copy()

            def moved(t, base=base, i=i, j=j):
                cand = base.copy()
                cand[i] += t
                cand[j] -= t
                return float(objective(np.clip(cand, 0.0, 1.0)[None, :])[0])

            value, t = scalar_max(moved, -base[i], base[j], xtol)
            if value > best:
                best = value
                prior = base
                prior[i] += t
                prior[j] -= t
                prior = np.clip(prior, 0.0, 1.0)
        if best - start <= xtol * max(1.0, abs(best)):
            break
    return best, prior / prior.sum()
