"""
Time-domain artificial noise confined to the null space of Bob's post-CP channel
"""

import logging

import numpy as np

from channel.channel_model import ofdm_operators
from core.config import OfdmConfig
from core.errors import ConfigurationError, NumericalError
from core.linalg import DEFAULT_RANK_TOL, null_space

logger = logging.getLogger(__name__)

AN_NORMALIZATIONS = ('exact', 'expected')


def an_basis(h_block: np.ndarray, cfg: OfdmConfig, tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """
    Orthonormal basis Q_a of null(R_cp H)

    Args:
        h_block: Bob's N_B(N+N_cp) x N_A(N+N_cp) block channel
        cfg: System dimensions
        tol: Relative rank tolerance

    Returns:
        N_A(N+N_cp) x d matrix with orthonormal columns, R_cp H Q_a ~ 0
    """
    ops = ofdm_operators(cfg.n_subcarriers, cfg.cp_len, cfg.n_rx_bob)
    post_cp = ops.cp_remove @ h_block
    q_a = null_space(post_cp, tol=tol)

    if q_a.shape[1] == 0:
        raise NumericalError(
            f"Post-CP channel {post_cp.shape[0]}x{post_cp.shape[1]} has no null space for artificial noise"
        )

    if cfg.n_streams == cfg.n_rx_bob:
        nominal = cfg.n_subcarriers * (cfg.n_tx - cfg.n_streams) + cfg.cp_len * cfg.n_tx
        if q_a.shape[1] != nominal:
            logger.warning(
                f"Artificial-noise space has dimension {q_a.shape[1]}, expected {nominal} "
                f"for a full-rank channel"
            )
    return q_a


def generate_an(q_a: np.ndarray, power: float, seed: int, normalization: str = 'exact') -> np.ndarray:
    """
    Draw z_a = Q_a d with d i.i.d. complex Gaussian

    Args:
        q_a: Orthonormal AN basis
        power: P_a, artificial-noise power
        seed: RNG seed
        normalization: 'exact' rescales each draw to ||z_a||^2 = P_a,
            'expected' only matches E||z_a||^2 = P_a

    Returns:
        Time-domain AN vector of length q_a.shape[0]
    """
    if normalization not in AN_NORMALIZATIONS:
        raise ConfigurationError(
            f"Unknown AN normalization {normalization!r}, use one of {AN_NORMALIZATIONS}"
        )
    if not power >= 0:
        raise ConfigurationError(f"Artificial-noise power must be >= 0, got {power}")

    z = np.zeros(q_a.shape[0], dtype=np.complex128)
    dim = q_a.shape[1]
    if power == 0 or dim == 0:
        return z

    rng = np.random.default_rng(seed)
    d = np.sqrt(power / (2.0 * dim)) * (rng.standard_normal(dim) + 1j * rng.standard_normal(dim))
    z = q_a @ d
    if normalization == 'exact':
        z *= np.sqrt(power) / np.linalg.norm(z)
    return z
