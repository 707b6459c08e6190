"""Lower bounds on the error exponent, in bits per channel use.

General forms optimize over the input prior and the tilting parameter ``s``.
Binary closed forms depend only on the channel parameter ``c`` and the rate.
An exponent of ``math.inf`` marks a bound that is unbounded (e.g. ``c = 0``
for the expurgated bound).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import CQChannel, mu_batch, mu_tilde_batch, state_powers
from .errors import NoConvergence, OutOfRange
from .priors import maximize_over_priors, scalar_max

LN2 = math.log(2.0)
S_MAX = 64.0
ZERO_OVERLAP = 1e-12
ROUNDOFF = 64 * np.finfo(float).eps


@dataclass(frozen=True)
class BoundPoint:
    rate: float
    value: float

    def __post_init__(self):
        if not (self.value >= 0.0):
            raise ValueError(f"exponent must be nonnegative or inf, got {self.value}")

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)


@dataclass(frozen=True)
class BinaryBoundParams:
    c: float
    rate: float

    def __post_init__(self):
        if not 0.0 <= self.c <= 1.0:
            raise OutOfRange(f"c = {self.c} not in [0, 1]")
        if not 0.0 <= self.rate <= 1.0:
            raise OutOfRange(f"rate = {self.rate} not in [0, 1]")


def _check_rate(ch: CQChannel, rate: float, strict_positive: bool = False):
    top = math.log2(ch.q)
    ok = (rate > 0.0 if strict_positive else rate >= 0.0) and rate <= top + 1e-15
    if not ok:
        raise OutOfRange(f"rate {rate} outside the admissible range for q = {ch.q}")


# ---------------------------------------------------------------------------
# general q-ary bounds


def max_mu(ch: CQChannel, s: float) -> tuple[float, np.ndarray]:
    powers = state_powers(ch, 1.0 / (1.0 + s))
    return maximize_over_priors(lambda P: mu_batch(ch, P, s, powers), ch.q)


def random_coding_exponent(ch: CQChannel, rate: float) -> BoundPoint:
    """``max_{0<=s<=1} max_P [mu(P, s) - s R]``, clamped at zero.

    Proven only for commuting or pure signal states; for other channels the
    expression is a conjectured bound.
    """
    _check_rate(ch, rate)
    value, _ = scalar_max(lambda s: max_mu(ch, s)[0] - s * rate, 0.0, 1.0, 1e-9)
    # near s = 0 the objective is a trace of a density matrix minus one: pure roundoff
    return BoundPoint(rate, value if value > ROUNDOFF else 0.0)


def quantum_cutoff_rate(ch: CQChannel) -> float:
    return max(max_mu(ch, 1.0)[0], 0.0)


def cutoff_exponent(ch: CQChannel, rate: float) -> BoundPoint:
    _check_rate(ch, rate)
    return BoundPoint(rate, max(quantum_cutoff_rate(ch) - rate, 0.0))


def _orthogonal_limit(ch: CQChannel) -> float:
    """``lim_{s->inf} max_P mu~(P, s) / s``: positive iff some symbols are perfectly distinguishable."""
    support = (ch.overlaps > ZERO_OVERLAP).astype(float)
    value, _ = maximize_over_priors(lambda P: -np.log2(np.einsum("gi,ij,gj->g", P, support, P)), ch.q)
    return value


def expurgated_exponent(ch: CQChannel, rate: float, s_max: float = S_MAX) -> BoundPoint:
    """``max_{s>=1} max_P [mu~(P, s) - s R]``.

    The search runs over ``t = 1/s`` in ``[1/s_max, 1]``. When the objective
    grows without bound in ``s`` the result is ``inf``.
    """
    _check_rate(ch, rate, strict_positive=True)
    if _orthogonal_limit(ch) > rate:
        return BoundPoint(rate, math.inf)

    def objective(t: float) -> float:
        s = 1.0 / t
        value, _ = maximize_over_priors(lambda P: mu_tilde_batch(ch, P, s), ch.q)
        return value - s * rate

    value, _ = scalar_max(objective, 1.0 / s_max, 1.0, 1e-10)
    return BoundPoint(rate, max(value, 0.0))


# ---------------------------------------------------------------------------
# binary entropy and distances


def binary_entropy(x: float) -> float:
    if not 0.0 <= x <= 1.0:
        raise OutOfRange(f"x = {x} not in [0, 1]")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def inverse_binary_entropy(y: float) -> float:
    """The preimage of ``y`` under the binary entropy in ``[0, 1/2]``, by bisection."""
    if not 0.0 <= y <= 1.0:
        raise OutOfRange(f"y = {y} not in [0, 1]")
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if binary_entropy(mid) < y:
            lo = mid
        else:
            hi = mid
    return lo if abs(binary_entropy(lo) - y) <= abs(binary_entropy(hi) - y) else hi


def gv_distance(rate: float) -> float:
    """Asymptotic Gilbert-Varshamov normalized distance."""
    if not 0.0 <= rate <= 1.0:
        raise OutOfRange(f"rate = {rate} not in [0, 1]")
    return inverse_binary_entropy(1.0 - rate)


def effective_distance(c: float) -> float:
    """Normalized distance that dominates the union bound for channel parameter ``c``."""
    if not 0.0 <= c <= 1.0:
        raise OutOfRange(f"c = {c} not in [0, 1]")
    return c / (1.0 + c)


def positivity_threshold(rate: float) -> float:
    """Largest ``c`` for which the cutoff bound is positive at ``rate``."""
    if not 0.0 <= rate <= 1.0:
        raise OutOfRange(f"rate = {rate} not in [0, 1]")
    return min(max(2.0 ** (1.0 - rate) - 1.0, 0.0), 1.0)


# ---------------------------------------------------------------------------
# binary closed forms


def binary_cutoff_rate(c: float) -> float:
    if not 0.0 <= c <= 1.0:
        raise OutOfRange(f"c = {c} not in [0, 1]")
    return 1.0 - math.log2(1.0 + c)


def binary_mu_tilde(c: float, s: float) -> float:
    """``mu~`` at the uniform prior: ``-s log2((1 + c^(1/s)) / 2)``."""
    if c == 0.0:
        return s
    # (1 + c^(1/s)) / 2 = 1 + expm1(ln(c)/s) / 2, accurate for large s
    return -s * math.log1p(0.5 * math.expm1(math.log(c) / s)) / LN2


def binary_mu_tilde_ds(c: float, s: float) -> float:
    """Analytic ``d mu~ / ds``."""
    lc = math.log(c)
    z = math.exp(lc / s)
    return -math.log1p(0.5 * math.expm1(lc / s)) / LN2 + z * lc / (LN2 * s * (1.0 + z))


def binary_mu_tilde_ds2(c: float, s: float) -> float:
    lc = math.log(c)
    z = math.exp(lc / s)
    return -(lc * lc * z) / (LN2 * s**3 * (1.0 + z) ** 2)


def expurgated_rate_forms(c: float) -> tuple[float, float]:
    """The two closed forms of the expurgated rate: derivative form and entropy form."""
    if not 0.0 < c < 1.0:
        raise OutOfRange(f"c = {c} must lie strictly inside (0, 1)")
    derivative_form = binary_mu_tilde(c, 1.0) + c / (1.0 + c) * math.log2(c)
    entropy_form = 1.0 - binary_entropy(effective_distance(c))
    return derivative_form, entropy_form


def expurgated_rate(c: float) -> float:
    """Rate below which expurgation improves on the cutoff bound; limits at ``c`` in {0, 1}."""
    if c == 0.0:
        return 1.0
    if c == 1.0:
        return 0.0
    return expurgated_rate_forms(c)[0]


def solve_expurgated_parameter(c: float, rate: float, tol: float = 1e-13, max_iter: int = 200) -> float:
    """Root ``s >= 1`` of ``d mu~/ds (s) = rate`` by Newton steps safeguarded with bisection.

    Requires ``0 < rate <= expurgated_rate(c)``.
    """

    def f(s):
        return binary_mu_tilde_ds(c, s) - rate

    lo, flo = 1.0, f(1.0)
    if flo < 0:
        raise OutOfRange(f"rate {rate} exceeds the expurgated rate {expurgated_rate(c)}")
    if flo <= tol:
        return 1.0
    hi = 2.0
    while f(hi) > 0:
        lo, hi = hi, 2.0 * hi
        if hi > 2.0**80:
            raise NoConvergence("could not bracket the expurgation parameter")
    s = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fs = f(s)
        if abs(fs) <= tol:
            return s
        if fs > 0:
            lo = s
        else:
            hi = s
        step = s - fs / binary_mu_tilde_ds2(c, s)
        s = step if lo < step < hi else 0.5 * (lo + hi)
        if hi - lo <= 4 * np.finfo(float).eps * hi:
            break
    if abs(f(s)) > 1e-10:
        raise NoConvergence(f"residual {f(s):.3e} after {max_iter} iterations")
    return s


def binary_expurgated_exponent(p: BinaryBoundParams) -> BoundPoint:
    """Expurgated bound at the uniform prior through the implicit stationarity condition."""
    if p.c == 0.0:
        return BoundPoint(p.rate, math.inf)
    if p.c == 1.0:
        return BoundPoint(p.rate, 0.0)
    if p.rate <= 0.0:
        raise OutOfRange("the expurgated bound needs a positive rate")
    if p.rate >= expurgated_rate(p.c):
        return BoundPoint(p.rate, max(binary_cutoff_rate(p.c) - p.rate, 0.0))
    s = solve_expurgated_parameter(p.c, p.rate)
    return BoundPoint(p.rate, max(binary_mu_tilde(p.c, s) - s * p.rate, 0.0))


def theorem1_objective(delta, c: float, rate: float):
    """Union-bound exponent at normalized distance ``delta`` for rescaled-binomial codes."""
    d = np.asarray(delta, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        h = np.where((d > 0) & (d < 1), -d * np.log2(np.where(d > 0, d, 1.0)) - (1 - d) * np.log2(np.where(d < 1, 1 - d, 1.0)), 0.0)
    return d * math.log2(1.0 / c) - h + 1.0 - rate


def theorem1_grid_minimum(c: float, rate: float, points: int = 10**6) -> tuple[float, float]:
    """``(min, argmin)`` of :func:`theorem1_objective` over a uniform grid on [0, 1]; ties go to smaller delta."""
    if not 0.0 < c < 1.0:
        raise OutOfRange(f"c = {c} must lie strictly inside (0, 1)")
    grid = np.linspace(0.0, 1.0, points)
    values = theorem1_objective(grid, c, rate)
    k = int(np.argmin(values))
    return float(values[k]), float(grid[k])


def theorem1_bound(p: BinaryBoundParams) -> BoundPoint:
    """Cutoff-rate bound attained by rescaled-binomial code families: ``1 - log2(1+c) - R``."""
    return BoundPoint(p.rate, max(binary_cutoff_rate(p.c) - p.rate, 0.0))


def theorem2_bound(p: BinaryBoundParams) -> BoundPoint:
    """Expurgated bound in Gilbert-Varshamov form below the expurgated rate, cutoff bound above."""
    if p.c == 0.0:
        return BoundPoint(p.rate, math.inf)
    if p.c == 1.0:
        return BoundPoint(p.rate, 0.0)
    if p.rate <= expurgated_rate(p.c):
        return BoundPoint(p.rate, math.log2(1.0 / p.c) * gv_distance(p.rate))
    return theorem1_bound(p)
