"""
Base class for transmit schemes and the per-trial seed and result types
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional
import logging

import numpy as np

from channel.channel_model import ChannelRealization, draw_channel
from core.config import OfdmConfig
from core.errors import InfeasibleMseCapError
from ofdm.frontend import random_frame, transmit
from precoding.artificial_noise import generate_an
from precoding.filters import SecureFilterSet
from receivers.mmse import equalize_and_score, mmse_filter


@dataclass(frozen=True)
class TrialSeeds:
    """
    Independent seeds for the random draws of one Monte Carlo trial
    """

    channel: int
    bits: int
    noise: int
    an: int

    @classmethod
    def derive(cls, master_seed: int, sweep_index: int, trial_index: int) -> 'TrialSeeds':
        """
        Hash (master_seed, sweep_index, trial_index) into four sub-seeds

        The result depends only on the triple, so trials can run in any
        order and on any worker.
        """
        seq = np.random.SeedSequence([int(master_seed), int(sweep_index), int(trial_index)])
        channel, bits, noise, an = (int(s) for s in seq.generate_state(4))
        return cls(channel=channel, bits=bits, noise=noise, an=an)


@dataclass(frozen=True)
class TrialResult:
    """
    Scores of one transmitted frame at Bob and Eve

    An infeasible trial (MSE cap out of reach) carries no scores, only
    the best MSE the power budget could reach.
    """

    bit_errors_bob: int = 0
    bit_errors_eve: int = 0
    bits_total: int = 0
    mse_bob: float = float('nan')
    mse_eve: float = float('nan')
    mse_bob_analytic: float = float('nan')
    mse_eve_analytic: float = float('nan')
    infeasible: bool = False
    best_mse: float = float('nan')

    @classmethod
    def infeasible_trial(cls, best_mse: float) -> 'TrialResult':
        return cls(infeasible=True, best_mse=float(best_mse))


class BaseSecureScheme(ABC):
    """
    Abstract base class for all transmit schemes
    """

    def __init__(self):
        self.scheme_name = self.get_scheme_name()
        self.logger = logging.getLogger(f"{__name__}.{self.scheme_name}")

    @abstractmethod
    def get_scheme_name(self) -> str:
        """Return the scheme name (e.g., 'mmse_filter', 'svd_baseline')"""
        pass

    @abstractmethod
    def design_filter(self, channel: ChannelRealization, cfg: OfdmConfig,
                      mse_cap: Optional[float] = None) -> SecureFilterSet:
        """
        Design Alice's transmit filter for one channel realization

        Args:
            channel: Channel realization, Alice knows Bob's part
            cfg: System dimensions and power budget
            mse_cap: gamma_b for schemes that need it

        Returns:
            SecureFilterSet to precode with
        """
        pass

    def get_description(self) -> str:
        """One-line summary shown by the CLI"""
        return self.scheme_name

    def uses_artificial_noise(self) -> bool:
        return False

    def requires_mse_cap(self) -> bool:
        return False

    def run_trial(self, cfg: OfdmConfig, seeds: TrialSeeds, mse_cap: Optional[float] = None,
                  an_normalization: str = 'exact') -> TrialResult:
        """
        Draw a channel, precode one frame and score both receivers

        Args:
            cfg: System dimensions and power budget
            seeds: Sub-seeds of this trial
            mse_cap: gamma_b for schemes that need it
            an_normalization: 'exact' or 'expected' AN power scaling

        Returns:
            TrialResult, flagged infeasible when the MSE cap is out of reach
        """
        channel = draw_channel(cfg, seeds.channel)
        self.log_design_attempt(cfg, mse_cap)
        try:
            filters = self.design_filter(channel, cfg, mse_cap)
        except InfeasibleMseCapError as e:
            self.logger.debug(f"Trial infeasible: {e}")
            return TrialResult.infeasible_trial(e.best_mse)

        frame = random_frame(cfg, seeds.bits)
        an = None
        if self.uses_artificial_noise() and filters.q_a is not None:
            an = generate_an(filters.q_a, filters.alloc.residual, seeds.an, an_normalization)

        bob_rx, eve_rx = transmit(frame, filters.w_t, an, channel, cfg, seeds.noise)

        # Eve knows G_eff and W_t but treats the AN as unknown interference
        cascade_bob = channel.h_eff @ filters.w_t
        cascade_eve = channel.g_eff @ filters.w_t
        bob = equalize_and_score(bob_rx, mmse_filter(cascade_bob, cfg.noise_var), frame, cascade_bob)
        eve = equalize_and_score(eve_rx, mmse_filter(cascade_eve, cfg.noise_var), frame, cascade_eve)

        result = TrialResult(
            bit_errors_bob=bob.bit_errors,
            bit_errors_eve=eve.bit_errors,
            bits_total=bob.bits_total,
            mse_bob=bob.mse_empirical,
            mse_eve=eve.mse_empirical,
            mse_bob_analytic=bob.mse_analytic,
            mse_eve_analytic=eve.mse_analytic,
        )
        self.log_design_result(filters, result)
        return result

    def log_design_attempt(self, cfg: OfdmConfig, mse_cap: Optional[float]):
        """Log trial parameters for debugging"""
        self.logger.debug(
            f"{self.scheme_name}: N={cfg.n_subcarriers}, N_A={cfg.n_tx}, "
            f"P_t={cfg.total_power:.6g}, cap={mse_cap}"
        )

    def log_design_result(self, filters: SecureFilterSet, result: TrialResult):
        """Log trial outcome"""
        self.logger.debug(
            f"{self.scheme_name}: used {filters.alloc.consumed:.6g}, AN {filters.alloc.residual:.6g}, "
            f"errors bob={result.bit_errors_bob} eve={result.bit_errors_eve} of {result.bits_total}"
        )

    def get_status(self) -> Dict[str, Any]:
        return {
            'scheme_name': self.scheme_name,
            'description': self.get_description(),
            'uses_artificial_noise': self.uses_artificial_noise(),
            'requires_mse_cap': self.requires_mse_cap(),
        }

    def __str__(self):
        """String representation"""
        an = "with AN" if self.uses_artificial_noise() else "no AN"
        return f"{self.scheme_name} scheme ({an})"
