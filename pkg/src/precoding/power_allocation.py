"""
Power allocation over parallel eigen-streams

Both solvers work on the same one-parameter family of allocations

    p_i(t) = max(0, sigma_z * t / sigma_i - sigma_z^2 / sigma_i^2)

which is the KKT solution of

  * MSE water-filling: min sum_i sigma_z^2 / (sigma_i^2 p_i + sigma_z^2)
    s.t. sum_i p_i <= P_t, with multiplier mu = 1 / t^2
  * min-power under an MSE cap: min sum_i p_i s.t. the same MSE sum <= gamma,
    with multiplier nu = t^2

The level t is found with Brent's method and then recomputed in closed form
on the resulting active set.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.optimize import brentq

from core.errors import ConfigurationError, InfeasibleMseCapError, NumericalError

logger = logging.getLogger(__name__)

LEVEL_XTOL = 1e-12
LEVEL_MAXITER = 200


@dataclass(frozen=True)
class PowerAllocation:
    """
    Per-stream power split

    Attributes:
        p: Non-negative power per stream
        consumed: P_c = sum(p)
        residual: P_a = budget - P_c, left over for artificial noise
        dual: KKT multiplier at the solution (NaN for fixed splits)
    """

    p: np.ndarray
    consumed: float
    residual: float
    dual: float

    @classmethod
    def from_powers(cls, p: np.ndarray, budget: float, dual: float) -> 'PowerAllocation':
        p = np.asarray(p, dtype=float)
        consumed = float(np.sum(p))
        return cls(p=p, consumed=consumed, residual=max(float(budget) - consumed, 0.0), dual=dual)


def allocation_mse(sigma, p, noise_var: float) -> float:
    """Total MSE sum_i sigma_z^2 / (sigma_i^2 p_i + sigma_z^2) of an allocation"""
    sigma = np.asarray(sigma, dtype=float)
    p = np.asarray(p, dtype=float)
    return float(np.sum(noise_var / (sigma ** 2 * p + noise_var)))


def _validate(sigma, noise_var: float, budget: float) -> np.ndarray:
    sigma = np.asarray(sigma, dtype=float).ravel()
    if sigma.size == 0:
        raise ConfigurationError("Singular value vector is empty")
    if not np.all(np.isfinite(sigma)) or np.any(sigma < 0):
        raise ConfigurationError("Singular values must be finite and non-negative")
    if not noise_var > 0:
        raise ConfigurationError(f"noise_var must be positive, got {noise_var}")
    if not budget >= 0 or not np.isfinite(budget):
        raise ConfigurationError(f"Power budget must be finite and >= 0, got {budget}")
    return sigma


def _powers_at_level(sigma: np.ndarray, noise_var: float, level: float) -> np.ndarray:
    p = np.zeros_like(sigma)
    pos = sigma > 0
    sz = np.sqrt(noise_var)
    p[pos] = np.maximum(0.0, sz * level / sigma[pos] - noise_var / sigma[pos] ** 2)
    return p


def _find_level(f, lo: float, hi: float, what: str) -> float:
    level, info = brentq(f, lo, hi, xtol=LEVEL_XTOL, maxiter=LEVEL_MAXITER, full_output=True,
                         disp=False)
    if not info.converged:
        raise NumericalError(f"{what} level search did not converge after {info.iterations} iterations")
    return level


def _waterfill(sigma: np.ndarray, noise_var: float, budget: float) -> Tuple[np.ndarray, float]:
    """Water-filling powers and level for sigma with at least one positive entry and budget > 0"""
    sz = np.sqrt(noise_var)
    s_max = float(sigma.max())
    lo = sz / s_max
    hi = (budget + noise_var / s_max ** 2) * s_max / sz

    level = _find_level(lambda t: _powers_at_level(sigma, noise_var, t).sum() - budget,
                        lo, hi, 'Water-filling')

    active = _powers_at_level(sigma, noise_var, level) > 0
    exact = (budget + np.sum(noise_var / sigma[active] ** 2)) / np.sum(sz / sigma[active])
    p = _powers_at_level(sigma, noise_var, exact)
    if np.count_nonzero(p > 0) == np.count_nonzero(active):
        return p, exact

    p = _powers_at_level(sigma, noise_var, level)
    return p * (budget / p.sum()), level


def solve_waterfill_mse(sigma, noise_var: float, budget: float) -> PowerAllocation:
    """
    Minimize the total MSE under a total power budget

    Args:
        sigma: Stream gains (singular values), non-negative
        noise_var: Receiver noise variance sigma_z^2
        budget: Total power P_t

    Returns:
        PowerAllocation using the whole budget whenever any gain is positive
    """
    sigma = _validate(sigma, noise_var, budget)

    if not np.any(sigma > 0):
        logger.debug("All stream gains are zero, nothing to allocate")
        return PowerAllocation.from_powers(np.zeros_like(sigma), budget, dual=0.0)
    if budget == 0:
        # multiplier bounded below by the best marginal gain at p = 0
        return PowerAllocation.from_powers(np.zeros_like(sigma), budget,
                                           dual=float(sigma.max() ** 2 / noise_var))

    p, level = _waterfill(sigma, noise_var, budget)
    return PowerAllocation.from_powers(p, budget, dual=1.0 / level ** 2)


def solve_minpower_mse(sigma, noise_var: float, budget: float, mse_cap: float) -> PowerAllocation:
    """
    Minimize total power subject to a cap on the total MSE

    Args:
        sigma: Stream gains (singular values), non-negative
        noise_var: Receiver noise variance sigma_z^2
        budget: Total power P_t available
        mse_cap: gamma_b, cap on the summed MSE

    Returns:
        PowerAllocation meeting the cap with equality when mse_cap < len(sigma);
        residual holds the power left for artificial noise

    Raises:
        InfeasibleMseCapError: the cap cannot be met within the budget
    """
    sigma = _validate(sigma, noise_var, budget)
    if not mse_cap > 0:
        raise ConfigurationError(f"MSE cap must be positive, got {mse_cap}")

    n = sigma.size
    if mse_cap >= n:
        return PowerAllocation.from_powers(np.zeros_like(sigma), budget, dual=0.0)

    best = solve_waterfill_mse(sigma, noise_var, budget)
    best_mse = allocation_mse(sigma, best.p, noise_var)
    if best_mse > mse_cap:
        raise InfeasibleMseCapError(mse_cap, best_mse)

    sz = np.sqrt(noise_var)
    pos = sigma > 0
    n_dead = n - int(np.count_nonzero(pos))

    def excess_mse(t):
        # active streams contribute sigma_z / (sigma_i * t), inactive ones 1
        return n_dead + np.sum(np.minimum(1.0, sz / (sigma[pos] * t))) - mse_cap

    lo = sz / float(sigma.max())
    hi = 1.0 / np.sqrt(best.dual)
    if excess_mse(hi) >= 0:
        level = hi
    else:
        level = _find_level(excess_mse, lo, hi, 'Min-power')

    active = _powers_at_level(sigma, noise_var, level) > 0
    slack = mse_cap - (n - np.count_nonzero(active))
    if slack > 0:
        exact = np.sum(sz / sigma[active]) / slack
        p = _powers_at_level(sigma, noise_var, exact)
        if np.count_nonzero(p > 0) == np.count_nonzero(active):
            level = exact

    p = _powers_at_level(sigma, noise_var, level)
    alloc = PowerAllocation.from_powers(p, budget, dual=level ** 2)
    logger.debug(f"Min-power allocation uses {alloc.consumed:.6g} of {budget:.6g}")
    return alloc
