"""Exact evaluation of the square-root decision rule on product-state codes.

All probabilities are traces of dense ``d**N``-dimensional operators; nothing
is sampled. The measurement mass outside the decision operators
(``I - sum_m D_m``) is treated as a decoding error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import linalg
from .channel import CQChannel, DensityMatrix, channel_param_c
from .codes import BlockCode
from .config import DEFAULT_DIM_CAP, DEFAULT_TOLERANCES, Tolerances
from .errors import DimensionMismatch, DimensionOverflow, OutOfRange, ValidationError

POVM_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class ProductState:
    matrix: DensityMatrix
    codeword: str


@dataclass(frozen=True, eq=False)
class DecisionRule:
    operators: tuple[np.ndarray, ...]
    r: float

    def __post_init__(self):
        for k, d in enumerate(self.operators):
            if linalg.hermitian_defect(d) > POVM_TOL or np.linalg.eigvalsh(d)[0] < -POVM_TOL:
                raise ValidationError(f"decision operator {k} is not PSD")
        if self.largest_total_eigenvalue() > 1.0 + POVM_TOL:
            raise ValidationError("decision operators sum to more than the identity")

    def total(self) -> np.ndarray:
        return reduce(np.add, self.operators)

    def largest_total_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.total())[-1])


@dataclass(frozen=True, eq=False)
class ErrorReport:
    per_word: np.ndarray
    overall: float
    suboptimal_bounds: np.ndarray
    union_bound: float
    inconclusive: np.ndarray
    effects: np.ndarray  # effects[m, j] = Tr S_m D_j


def _check_dim(ch: CQChannel, n: int, cap: int) -> int:
    dim = ch.dim**n
    if dim > cap:
        raise DimensionOverflow(dim, cap)
    return dim


def product_state(word: str, ch: CQChannel, cap: int = DEFAULT_DIM_CAP) -> ProductState:
    symbols = [int(x) for x in word]
    if any(not 0 <= x < ch.q for x in symbols):
        raise ValidationError(f"word {word!r} uses symbols outside the channel alphabet")
    _check_dim(ch, len(symbols), cap)
    mat = reduce(np.kron, (ch.states[x].matrix for x in symbols))
    return ProductState(DensityMatrix(mat), word)


def _product_states(code: BlockCode, ch: CQChannel, cap: int) -> list[DensityMatrix]:
    if code.q > ch.q:
        raise DimensionMismatch(f"code alphabet {code.q} exceeds channel alphabet {ch.q}")
    _check_dim(ch, code.n, cap)
    return [product_state(w, ch, cap).matrix for w in code.words]


def _check_r(r: float):
    if not 0.0 < r <= 1.0:
        raise OutOfRange(f"r = {r} not in (0, 1]")


def _power(s: DensityMatrix, a: float, tol: Tolerances) -> np.ndarray:
    # S**0 is read as the projector onto the support of S
    if a == 0.0:
        return linalg.support_projector(s.matrix, tol)
    return linalg.mat_power(s.matrix, a, tol)


def _povm(states: list[DensityMatrix], r: float, tol: Tolerances) -> tuple[list[np.ndarray], list[np.ndarray]]:
    powered = [_power(s, r, tol) for s in states]
    norm = linalg.pinv_sqrt(reduce(np.add, powered), tol)
    ops = []
    for p in powered:
        d = norm @ p @ norm
        ops.append(0.5 * (d + d.conj().T))
    return powered, ops


def holevo_povm(code: BlockCode, ch: CQChannel, r: float = 0.5, cap: int = DEFAULT_DIM_CAP,
                tol: Tolerances = DEFAULT_TOLERANCES) -> DecisionRule:
    """``D_m = T**-1/2 S_m**r T**-1/2`` with ``T = sum_j S_j**r`` and a pseudo-inverse on the support of ``T``."""
    _check_r(r)
    _, ops = _povm(_product_states(code, ch, cap), r, tol)
    return DecisionRule(tuple(ops), r)


def error_report(code: BlockCode, ch: CQChannel, r: float = 0.5, cap: int = DEFAULT_DIM_CAP,
                 tol: Tolerances = DEFAULT_TOLERANCES) -> ErrorReport:
    _check_r(r)
    states = _product_states(code, ch, cap)
    powered, ops = _povm(states, r, tol)
    DecisionRule(tuple(ops), r)
    M = code.M
    effects = np.array([[linalg.trace_product(s.matrix, d).real for d in ops] for s in states])
    complement = [_power(s, 1.0 - r, tol) for s in states]
    bounds = np.array([
        sum(linalg.trace_product(complement[m], powered[j]).real for j in range(M) if j != m)
        for m in range(M)
    ])
    per_word = np.clip(1.0 - np.diag(effects), 0.0, 1.0)
    inconclusive = np.clip(1.0 - effects.sum(axis=1), 0.0, 1.0)
    return ErrorReport(
        per_word=per_word,
        overall=float(per_word.mean()),
        suboptimal_bounds=bounds,
        union_bound=float(bounds.mean()),
        inconclusive=inconclusive,
        effects=effects,
    )


def verify_lemma1(code: BlockCode, ch: CQChannel, cap: int = DEFAULT_DIM_CAP,
                  tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Largest ``|Tr sqrt(S_m) sqrt(S_j) - c**d(x_m, x_j)|`` over pairs of distinct codewords."""
    c = channel_param_c(ch)
    roots = [linalg.mat_power(s.matrix, 0.5, tol) for s in _product_states(code, ch, cap)]
    worst = 0.0
    for m in range(code.M):
        for j in range(m + 1, code.M):
            overlap = linalg.trace_product(roots[m], roots[j])
            worst = max(worst, abs(overlap - c ** code.distances[m, j]))
    return worst
