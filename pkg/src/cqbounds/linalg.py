"""Dense Hermitian matrix kernel.

Spectral functions (powers, pseudo-inverse square roots) are evaluated via a
Hermitian eigendecomposition. Eigenvalues below ``max(null_rel, dim * eps) * lambda_max`` are
treated as exact zeros so that powers and inverses act on the support only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_DIM_CAP, DEFAULT_TOLERANCES, Tolerances
from .errors import DimensionMismatch, DimensionOverflow, NoConvergence, NotHermitian, NotPSD, ValidationError


@dataclass(frozen=True)
class HermitianSpectrum:
    """Eigenvalues in descending order; column ``k`` of ``eigenvectors`` pairs with ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self, values: np.ndarray | None = None) -> np.ndarray:
        lam = self.eigenvalues if values is None else values
        v = self.eigenvectors
        return (v * lam) @ v.conj().T


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValidationError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix has non-finite entries")
    return a


def hermitian_defect(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


def eigh(m, tol: Tolerances = DEFAULT_TOLERANCES) -> HermitianSpectrum:
    a = as_matrix(m)
    scale = max(1.0, float(np.max(np.abs(a))))
    if hermitian_defect(a) > tol.hermitian * scale:
        raise NotHermitian(f"max |m - m^H| = {hermitian_defect(a):.3e}")
    try:
        lam, vec = np.linalg.eigh(0.5 * (a + a.conj().T))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(str(exc)) from exc
    return HermitianSpectrum(lam[::-1].copy(), vec[:, ::-1].copy())


def _psd_spectrum(m, tol: Tolerances) -> tuple[HermitianSpectrum, np.ndarray]:
    """Spectrum plus a mask of the support; small negative roundoff is clamped."""
    spec = eigh(m, tol)
    lam = spec.eigenvalues
    norm = float(np.max(np.abs(lam)))
    if lam[-1] < -tol.psd * norm:
        raise NotPSD(f"smallest eigenvalue {lam[-1]:.3e}")
    cutoff = max(tol.null_rel, lam.size * np.finfo(float).eps) * lam[0]
    support = lam > cutoff if lam[0] > 0 else np.zeros(lam.shape, bool)
    return spec, support


def mat_power(m, a: float, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """``m**a`` for PSD ``m`` and ``a > 0``; null eigenvalues stay null."""
    if not a > 0:
        raise ValidationError(f"exponent must be positive, got {a}")
    spec, support = _psd_spectrum(m, tol)
    powered = np.where(support, np.clip(spec.eigenvalues, 0.0, None), 0.0) ** a
    return spec.reconstruct(np.where(support, powered, 0.0))


def pinv_sqrt(m, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Pseudo-inverse square root, acting as ``m**-1/2`` on the support of ``m``."""
    spec, support = _psd_spectrum(m, tol)
    lam = spec.eigenvalues
    inv = np.zeros_like(lam)
    inv[support] = 1.0 / np.sqrt(lam[support])
    return spec.reconstruct(inv)


def support_projector(m, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    spec, support = _psd_spectrum(m, tol)
    return spec.reconstruct(support.astype(float))


def tensor(a, b, cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    dim = a.shape[0] * b.shape[0]
    if dim > cap:
        raise DimensionOverflow(dim, cap)
    return np.kron(a, b)


def trace_product(a, b) -> complex:
    """``Tr(a @ b)`` without forming the product."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} vs {b.shape}")
    return complex(np.einsum("ij,ji->", a, b))
