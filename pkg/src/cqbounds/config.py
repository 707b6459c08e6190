"""Numerical tolerances and run configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-9
    psd: float = 1e-10
    trace: float = 1e-9
    prior_sum: float = 1e-12
    # eigenvalues below max(null_rel, dim * eps) * lambda_max are treated as exactly zero;
    # fractional powers turn a dropped eigenvalue lam into an error of order sqrt(lam), so keep this small
    null_rel: float = 1e-14
    optimizer: float = 1e-10

    def __post_init__(self):
        for name, value in vars(self).items():
            if not value > 0:
                raise ValueError(f"tolerance {name} must be positive, got {value}")


DEFAULT_TOLERANCES = Tolerances()
DEFAULT_DIM_CAP = 4096


@dataclass(frozen=True)
class RunConfig:
    tolerances: Tolerances = field(default_factory=Tolerances)
    grid: int = 200
    seed: int = 0
    dimension_cap: int = DEFAULT_DIM_CAP

    def __post_init__(self):
        if self.grid < 2:
            raise ValueError(f"grid must be >= 2, got {self.grid}")
        if self.dimension_cap < 1:
            raise ValueError(f"dimension_cap must be >= 1, got {self.dimension_cap}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "RunConfig":
        """Build a config from ``CQX_*`` variables; non-None overrides win."""
        env = os.environ if environ is None else environ
        values = {}
        if "CQX_GRID" in env:
            values["grid"] = int(env["CQX_GRID"])
        if "CQX_SEED" in env:
            values["seed"] = int(env["CQX_SEED"])
        if "CQX_DIM_CAP" in env:
            values["dimension_cap"] = int(env["CQX_DIM_CAP"])
        values.update({k: v for k, v in overrides.items() if v is not None})
        return replace(cls(), **values)
