"""Complex-Hermitian kernels with explicit contracts.

Thin wrappers over LAPACK (via numpy/scipy) that add the validation,
ordering, loading, and error-reporting conventions the estimation and
optimization stages rely on.  Everything here is pure and reentrant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

HERMITIAN_RTOL = 1e-10
"Construction gate: max |A - A^H| <= HERMITIAN_RTOL * ||A||_F."

DEFAULT_LOADING_FACTOR = 1e-3
"Default diagonal loading is DEFAULT_LOADING_FACTOR * trace(A) / dim."


class EigenConvergenceError(RuntimeError):
    "Eigendecomposition failed or violated its residual contract."

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class SingularMatrixError(RuntimeError):
    "Factorization failed even after diagonal loading."


@dataclass(frozen=True)
class HermitianMatrix:
    """Square complex matrix certified Hermitian at construction.

    ``loading`` records the real diagonal-loading factor already applied to
    ``values`` (0 if none), so estimates stay traceable to their raw form.
    """

    values: np.ndarray
    loading: float = 0.0

    def __post_init__(self):
        a = np.asarray(self.values, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("matrix must be square")
        norm = np.linalg.norm(a)
        skew = np.abs(a - a.conj().T).max()
        if norm > 0 and skew > HERMITIAN_RTOL * norm:
            raise ValueError(
                f"matrix is not Hermitian: max|A - A^H| = {skew:.3e} "
                f"exceeds {HERMITIAN_RTOL:.0e} * ||A||_F = {HERMITIAN_RTOL * norm:.3e}")
        object.__setattr__(self, "values", 0.5 * (a + a.conj().T))

    @property
    def dim(self) -> int:
        return self.values.shape[0]


def default_loading(a: np.ndarray) -> float:
    "Default diagonal-loading level for an estimated covariance."
    a = np.asarray(a)
    return DEFAULT_LOADING_FACTOR * float(np.trace(a).real) / a.shape[0]


def load_hermitian(a: np.ndarray, loading: float | None = None) -> HermitianMatrix:
    "Wrap a raw estimate with diagonal loading applied (default policy)."
    a = np.asarray(a, dtype=complex)
    eps = default_loading(a) if loading is None else float(loading)
    return HermitianMatrix(a + eps * np.eye(a.shape[0]), loading=eps)


def eig_hermitian(a: HermitianMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition A = V diag(w) V^H with eigenvalues descending.

    Eigenvector global phases are fixed deterministically (first component of
    magnitude > 1e-12 made real positive).  Raises EigenConvergenceError if
    LAPACK fails or the reconstruction residual exceeds 1e-8 relative.
    """
    try:
        w, v = np.linalg.eigh(a.values)
    except np.linalg.LinAlgError as exc:
        raise EigenConvergenceError(f"eigh did not converge: {exc}", np.inf) from None
    w = w[::-1].copy()
    v = v[:, ::-1].copy()
    for k in range(v.shape[1]):
        idx = np.argmax(np.abs(v[:, k]) > 1e-12)
        pivot = v[idx, k]
        if abs(pivot) > 1e-12:
            v[:, k] *= np.conj(pivot) / abs(pivot)
    scale = max(np.abs(w).max(), 1e-300)
    residual = np.abs(a.values @ v - v * w[None, :]).max() / scale
    if not np.isfinite(residual) or residual > 1e-8:
        raise EigenConvergenceError("eigendecomposition residual too large", residual)
    return w, v


def solve_loaded(a: HermitianMatrix, b: np.ndarray, epsilon: float = 0.0) -> np.ndarray:
    """Solve (A + epsilon I) x = b through a Cholesky/Hermitian factorization.

    The inverse is never formed.  Raises SingularMatrixError when the loaded
    matrix cannot be factorized or the residual contract
    ||(A + eps I) x - b|| <= 1e-8 ||b|| fails.
    """
    if epsilon < 0.0:
        raise ValueError("epsilon must be >= 0")
    b = np.asarray(b, dtype=complex)
    m = a.values if epsilon == 0.0 else a.values + epsilon * np.eye(a.dim)
    try:
        c, low = scipy.linalg.cho_factor(m, check_finite=False)
        x = scipy.linalg.cho_solve((c, low), b, check_finite=False)
    except (scipy.linalg.LinAlgError, ValueError):
        try:
            x = scipy.linalg.solve(m, b, assume_a="her", check_finite=False)
        except (scipy.linalg.LinAlgError, ValueError) as exc:
            raise SingularMatrixError(f"loaded solve failed: {exc}") from None
    bnorm = np.linalg.norm(b)
    if bnorm > 0:
        residual = np.linalg.norm(m @ x - b) / bnorm
        if not residual <= 1e-8:
            raise SingularMatrixError(
                f"solution residual {residual:.3e} exceeds 1e-8 (matrix near singular)")
    return x


def trace_inverse_sum(eigenvalues: np.ndarray) -> float:
    "Sum of reciprocal eigenvalues, the whitened-energy objective."
    w = np.asarray(eigenvalues, dtype=float)
    if np.any(w <= 0.0):
        raise ValueError("eigenvalues must be strictly positive (load first)")
    return float(np.sum(1.0 / w))
