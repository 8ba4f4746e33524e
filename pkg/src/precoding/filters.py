"""
Transmit filter design from the SVD of Bob's effective channel
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from channel.channel_model import subcarrier_blocks
from core.config import OfdmConfig
from core.errors import ConfigurationError
from core.linalg import block_diag, svd

from .artificial_noise import an_basis
from .power_allocation import PowerAllocation, solve_minpower_mse, solve_waterfill_mse


@dataclass(frozen=True)
class SecureFilterSet:
    """
    Everything Alice needs to precode one OFDM symbol

    Attributes:
        w_t: N_A*N x N_s*N transmit filter V_t diag(sqrt(p))
        alloc: Power split behind w_t
        sigma: Gain of each transmitted stream, in column order of w_t
        q_a: Artificial-noise basis, None when the scheme sends no AN
        lambdas: sigma_i^2 p_i per stream
    """

    w_t: np.ndarray
    alloc: PowerAllocation
    sigma: np.ndarray
    q_a: Optional[np.ndarray] = None
    lambdas: Optional[np.ndarray] = None

    @property
    def transmit_power(self) -> float:
        """Tr(W_t W_t^H)"""
        return float(np.sum(np.abs(self.w_t) ** 2))


def _check_effective(h_eff: np.ndarray, cfg: OfdmConfig):
    expected = (cfg.n_rx_bob * cfg.n_subcarriers, cfg.n_tx * cfg.n_subcarriers)
    if h_eff.shape != expected:
        raise ConfigurationError(f"Effective channel has shape {h_eff.shape}, expected {expected}")


def _leading_modes(h_eff: np.ndarray, cfg: OfdmConfig):
    dec = svd(h_eff)
    n = cfg.n_symbols
    if dec.sigma.size < n:
        raise ConfigurationError(f"Channel offers {dec.sigma.size} singular values, need {n}")
    return dec.sigma[:n], dec.v[:, :n]


def _assemble(v_t: np.ndarray, sigma: np.ndarray, alloc: PowerAllocation,
              q_a: Optional[np.ndarray] = None) -> SecureFilterSet:
    return SecureFilterSet(
        w_t=v_t * np.sqrt(alloc.p)[np.newaxis, :],
        alloc=alloc,
        sigma=sigma,
        q_a=q_a,
        lambdas=sigma ** 2 * alloc.p,
    )


def design_mse_filter(h_eff: np.ndarray, cfg: OfdmConfig) -> SecureFilterSet:
    """
    MSE-minimizing transmit filter under the total power budget

    Takes the first N_s*N right-singular vectors of H_eff and water-fills
    cfg.total_power over them.

    Args:
        h_eff: Bob's effective channel, subcarrier-major
        cfg: System dimensions and power

    Returns:
        SecureFilterSet without an AN basis
    """
    _check_effective(h_eff, cfg)
    sigma, v_t = _leading_modes(h_eff, cfg)
    alloc = solve_waterfill_mse(sigma, cfg.noise_var, cfg.total_power)
    return _assemble(v_t, sigma, alloc)


def design_minpower_filter(h_eff: np.ndarray, cfg: OfdmConfig, mse_cap: float,
                           h_block: Optional[np.ndarray] = None) -> SecureFilterSet:
    """
    Least-power transmit filter meeting the MSE cap at Bob

    Args:
        h_eff: Bob's effective channel, subcarrier-major
        cfg: System dimensions and power budget
        mse_cap: gamma_b, cap on Bob's total MSE
        h_block: Bob's block channel; when given the AN basis is attached

    Returns:
        SecureFilterSet whose alloc.residual is the AN power

    Raises:
        InfeasibleMseCapError: cfg.total_power cannot reach mse_cap
    """
    _check_effective(h_eff, cfg)
    sigma, v_t = _leading_modes(h_eff, cfg)
    alloc = solve_minpower_mse(sigma, cfg.noise_var, cfg.total_power, mse_cap)
    q_a = an_basis(h_block, cfg) if h_block is not None else None
    return _assemble(v_t, sigma, alloc, q_a)


def svd_baseline_filter(h_eff: np.ndarray, cfg: OfdmConfig) -> SecureFilterSet:
    """
    Conventional per-subcarrier SVD precoder with equal power

    Each subcarrier sends N_s streams on its own leading right-singular
    vectors with P_t / (N_s*N) per stream.

    Args:
        h_eff: Bob's effective channel, subcarrier-major
        cfg: System dimensions and power

    Returns:
        SecureFilterSet with a block-diagonal w_t
    """
    _check_effective(h_eff, cfg)
    blocks = subcarrier_blocks(h_eff, cfg.n_subcarriers, cfg.n_rx_bob, cfg.n_tx)
    per_stream = cfg.total_power / cfg.n_symbols

    precoders = []
    gains = []
    for blk in blocks:
        dec = svd(blk)
        precoders.append(dec.v[:, :cfg.n_streams] * np.sqrt(per_stream))
        gains.append(dec.sigma[:cfg.n_streams])

    p = np.full(cfg.n_symbols, per_stream)
    alloc = PowerAllocation.from_powers(p, cfg.total_power, dual=float('nan'))
    sigma = np.concatenate(gains)
    return SecureFilterSet(
        w_t=block_diag(precoders),
        alloc=alloc,
        sigma=sigma,
        lambdas=sigma ** 2 * p,
    )
