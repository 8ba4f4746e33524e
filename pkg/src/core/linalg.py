"""
Dense complex linear algebra used by every other module

All matrices are plain 2-D complex numpy arrays. The helpers here wrap
scipy.linalg so that failures surface as NumericalError and results are
always finite.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .errors import ConfigurationError, NumericalError

logger = logging.getLogger(__name__)

# Rank tolerance relative to the largest singular value
DEFAULT_RANK_TOL = 1e-10

ComplexMatrix = np.ndarray


@dataclass(frozen=True)
class SvdResult:
    """
    Thin singular value decomposition a = u @ diag(sigma) @ v^H

    Attributes:
        u: Left singular vectors (orthonormal columns)
        sigma: Singular values, descending, non-negative
        v: Right singular vectors (orthonormal columns)
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Rebuild the decomposed matrix"""
        return (self.u * self.sigma) @ self.v.conj().T


def as_complex_matrix(a, name: str = 'matrix') -> np.ndarray:
    """
    Coerce input to a finite 2-D complex array

    Args:
        a: Array-like input
        name: Label used in error messages

    Returns:
        np.ndarray of dtype complex128
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ConfigurationError(f"{name} must be a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NumericalError(f"{name} ({m.shape[0]}x{m.shape[1]}) contains NaN or Inf entries")
    return m


def svd(a) -> SvdResult:
    """
    Singular value decomposition with min(rows, cols) singular values

    Args:
        a: Finite complex matrix

    Returns:
        SvdResult with descending singular values
    """
    m = as_complex_matrix(a)
    rows, cols = m.shape
    try:
        u, s, vh = scipy.linalg.svd(m, full_matrices=False, lapack_driver='gesdd')
    except np.linalg.LinAlgError:
        # gesdd occasionally fails where the slower QR-iteration driver converges
        logger.debug(f"gesdd did not converge for {rows}x{cols} matrix, retrying with gesvd")
        try:
            u, s, vh = scipy.linalg.svd(m, full_matrices=False, lapack_driver='gesvd')
        except np.linalg.LinAlgError as e:
            raise NumericalError(f"SVD did not converge for {rows}x{cols} matrix") from e

    return SvdResult(u=u, sigma=s, v=vh.conj().T)


def null_space(a, tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """
    Orthonormal basis of the numerical null space of a

    Singular values at or below tol * sigma_max count as zero. A full
    column rank input yields an explicit (cols x 0) empty basis.

    Args:
        a: Finite complex matrix
        tol: Relative rank tolerance, > 0

    Returns:
        Matrix Q with orthonormal columns, A @ Q ~ 0
    """
    if not tol > 0:
        raise ConfigurationError(f"Rank tolerance must be positive, got {tol}")
    m = as_complex_matrix(a)
    try:
        q = scipy.linalg.null_space(m, rcond=tol)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"SVD did not converge for {m.shape[0]}x{m.shape[1]} matrix") from e
    return q.astype(np.complex128, copy=False)


def dft_matrix(n: int) -> np.ndarray:
    """Unitary n-point DFT matrix, entry (j, k) = exp(-2j*pi*j*k/n) / sqrt(n)"""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ConfigurationError(f"DFT size must be a positive integer, got {n!r}")
    return scipy.linalg.dft(int(n), scale='sqrtn').astype(np.complex128, copy=False)


def block_diag(blocks: Sequence) -> np.ndarray:
    """Block-diagonal matrix with the given blocks placed in list order"""
    if len(blocks) == 0:
        raise ConfigurationError("block_diag needs at least one block")
    return scipy.linalg.block_diag(*[np.atleast_2d(b) for b in blocks]).astype(np.complex128)
