"""Classical-quantum channels and their exponent kernels.

A channel maps each input symbol ``i`` to a density matrix ``S_i``. Entropies
and rates are in bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from . import linalg
from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import InvalidState, NotBinary, OutOfRange, ParseError, ValidationError
from .priors import maximize_over_priors


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray
    tol: Tolerances = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self):
        try:
            m = linalg.as_matrix(self.matrix)
        except ValidationError as exc:
            raise InvalidState(str(exc)) from exc
        if linalg.hermitian_defect(m) > self.tol.hermitian:
            raise InvalidState("density matrix is not Hermitian")
        m = 0.5 * (m + m.conj().T)
        lam = np.linalg.eigvalsh(m)
        if lam[0] < -self.tol.psd:
            raise InvalidState(f"density matrix has negative eigenvalue {lam[0]:.3e}")
        if abs(np.trace(m).real - 1.0) > self.tol.trace:
            raise InvalidState(f"trace {np.trace(m).real!r} differs from 1")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def sqrt(self) -> np.ndarray:
        return linalg.mat_power(self.matrix, 0.5, self.tol)

    def power(self, a: float) -> np.ndarray:
        return linalg.mat_power(self.matrix, a, self.tol)


@dataclass(frozen=True, eq=False)
class CQChannel:
    states: tuple[DensityMatrix, ...]

    def __post_init__(self):
        states = tuple(s if isinstance(s, DensityMatrix) else DensityMatrix(s) for s in self.states)
        if len(states) < 2:
            raise ValidationError("a channel needs at least two input symbols")
        if len({s.dim for s in states}) != 1:
            raise ValidationError("all signal states must share one dimension")
        object.__setattr__(self, "states", states)

    @property
    def q(self) -> int:
        return len(self.states)

    @property
    def dim(self) -> int:
        return self.states[0].dim

    @cached_property
    def overlaps(self) -> np.ndarray:
        """Matrix of fidelity-type overlaps ``Tr sqrt(S_i) sqrt(S_j)``, clamped to [0, 1]."""
        roots = [s.sqrt for s in self.states]
        z = np.empty((self.q, self.q))
        for i, a in enumerate(roots):
            for j, b in enumerate(roots):
                z[i, j] = linalg.trace_product(a, b).real
        z = np.clip(0.5 * (z + z.T), 0.0, 1.0)
        z.setflags(write=False)
        return z

    def is_commuting(self, atol: float = 1e-10) -> bool:
        mats = [s.matrix for s in self.states]
        return all(np.max(np.abs(a @ b - b @ a)) <= atol for a in mats for b in mats)

    def is_pure(self, atol: float = 1e-9) -> bool:
        return all(abs(np.trace(s.matrix @ s.matrix).real - 1.0) <= atol for s in self.states)


@dataclass(frozen=True, eq=False)
class PriorDistribution:
    probs: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float)
        if p.ndim != 1 or np.any(p < 0) or abs(p.sum() - 1.0) > DEFAULT_TOLERANCES.prior_sum:
            raise ValidationError(f"not a probability vector: {p}")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @classmethod
    def uniform(cls, q: int) -> "PriorDistribution":
        return cls(np.full(q, 1.0 / q))


def _prior_array(ch: CQChannel, p) -> np.ndarray:
    probs = p.probs if isinstance(p, PriorDistribution) else PriorDistribution(p).probs
    if probs.shape != (ch.q,):
        raise ValidationError(f"prior has {probs.shape[0]} entries, channel has {ch.q} symbols")
    return probs


def bsc_channel(p: float) -> CQChannel:
    """Commuting diagonal states that realize a binary symmetric channel."""
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"crossover probability {p} not in [0, 1]")
    return CQChannel((np.diag([1.0 - p, p]), np.diag([p, 1.0 - p])))


def pure_state_channel(eps: float) -> CQChannel:
    """Two pure qubit states with ``|<psi1|psi2>| = eps``."""
    if not 0.0 <= eps <= 1.0:
        raise OutOfRange(f"overlap {eps} not in [0, 1]")
    a = np.array([1.0, 0.0])
    b = np.array([eps, np.sqrt(1.0 - eps * eps)])
    return CQChannel((np.outer(a, a), np.outer(b, b)))


def channel_param_c(ch: CQChannel) -> float:
    if ch.q != 2:
        raise NotBinary(f"channel has {ch.q} input symbols")
    return float(ch.overlaps[0, 1])


def _entropy_of_eigenvalues(lam: np.ndarray) -> np.ndarray:
    lam = np.clip(lam, 0.0, None)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam > 0, -lam * np.log2(np.where(lam > 0, lam, 1.0)), 0.0)
    return terms.sum(axis=-1)


def von_neumann_entropy(s: DensityMatrix) -> float:
    if not isinstance(s, DensityMatrix):
        s = DensityMatrix(s)
    return float(_entropy_of_eigenvalues(np.linalg.eigvalsh(s.matrix)))


def holevo_quantity(ch: CQChannel, priors: np.ndarray) -> np.ndarray:
    """Batched ``H(sum p_i S_i) - sum p_i H(S_i)`` for rows of ``priors``."""
    priors = np.atleast_2d(priors)
    stack = np.stack([s.matrix for s in ch.states])
    mixed = np.einsum("gi,ijk->gjk", priors, stack)
    own = np.array([von_neumann_entropy(s) for s in ch.states])
    return _entropy_of_eigenvalues(np.linalg.eigvalsh(mixed)) - priors @ own


def holevo_capacity(ch: CQChannel) -> tuple[float, PriorDistribution]:
    value, prior = maximize_over_priors(lambda P: holevo_quantity(ch, P), ch.q)
    return max(value, 0.0), PriorDistribution(prior)


def _check_mu_s(s: float):
    if not 0.0 <= s <= 1.0:
        raise OutOfRange(f"s = {s} not in [0, 1]")


def mu_batch(ch: CQChannel, priors: np.ndarray, s: float, powers: np.ndarray | None = None) -> np.ndarray:
    """``mu(P, s)`` for each row of ``priors``.

    ``powers`` may carry the precomputed stack of ``S_i**(1/(1+s))``.
    """
    _check_mu_s(s)
    if powers is None:
        powers = state_powers(ch, 1.0 / (1.0 + s))
    mixed = np.einsum("gi,ijk->gjk", np.atleast_2d(priors), powers)
    lam = np.clip(np.linalg.eigvalsh(mixed), 0.0, None)
    return -np.log2(np.sum(lam ** (1.0 + s), axis=-1))


def state_powers(ch: CQChannel, a: float) -> np.ndarray:
    return np.stack([s.power(a) for s in ch.states])


def mu(ch: CQChannel, p, s: float) -> float:
    """``-log2 Tr[(sum_i p_i S_i^(1/(1+s)))^(1+s)]`` for ``s`` in [0, 1]."""
    _check_mu_s(s)
    return max(float(mu_batch(ch, _prior_array(ch, p)[None, :], s)[0]), 0.0)


def mu_tilde_batch(ch: CQChannel, priors: np.ndarray, s: float) -> np.ndarray:
    if not s >= 1.0:
        raise OutOfRange(f"s = {s} must be >= 1")
    priors = np.atleast_2d(priors)
    z = ch.overlaps ** (1.0 / s)
    return -s * np.log2(np.einsum("gi,ij,gj->g", priors, z, priors))


def mu_tilde(ch: CQChannel, p, s: float) -> float:
    """``-s log2 sum_ij p_i p_j (Tr sqrt(S_i) sqrt(S_j))^(1/s)`` for ``s >= 1``."""
    return float(mu_tilde_batch(ch, _prior_array(ch, p)[None, :], s)[0])


def channel_from_dict(data: dict) -> CQChannel:
    try:
        dim = int(data["dim"])
        raw = data["states"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"channel needs integer 'dim' and array 'states': {exc}") from exc
    states = []
    for k, rows in enumerate(raw):
        try:
            m = np.array([[complex(re, im) for re, im in row] for row in rows])
        except (TypeError, ValueError) as exc:
            raise ParseError(f"state {k}: entries must be [re, im] pairs") from exc
        if m.shape != (dim, dim):
            raise ParseError(f"state {k}: shape {m.shape}, expected ({dim}, {dim})")
        try:
            states.append(DensityMatrix(m))
        except InvalidState as exc:
            raise InvalidState(f"state {k}: {exc}") from exc
    return CQChannel(tuple(states))


def channel_to_dict(ch: CQChannel) -> dict:
    return {
        "dim": ch.dim,
        "states": [[[[z.real, z.imag] for z in row] for row in s.matrix.tolist()] for s in ch.states],
    }


def load_channel(path: str | Path) -> CQChannel:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from exc
    return channel_from_dict(data)


def save_channel(ch: CQChannel, path: str | Path):
    Path(path).write_text(json.dumps(channel_to_dict(ch), indent=1) + "\n")
