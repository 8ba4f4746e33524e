from typing import Optional

from channel.channel_model import ChannelRealization
from core.config import OfdmConfig
from core.errors import ConfigurationError
from precoding.filters import SecureFilterSet, design_minpower_filter
from schemes.base_scheme import BaseSecureScheme


class MmseFilterCappedScheme(BaseSecureScheme):
    """
    Least power that keeps Bob's MSE at the cap; leftover power is unused
    """

    def get_scheme_name(self) -> str:
        """Return scheme name"""
        return "mmse_filter_capped"

    def get_description(self) -> str:
        return "Min-power precoder meeting Bob's MSE cap, residual power left idle"

    def requires_mse_cap(self) -> bool:
        return True

    def _check_cap(self, mse_cap: Optional[float]) -> float:
        if mse_cap is None:
            raise ConfigurationError(f"Scheme {self.scheme_name} needs an MSE cap")
        return mse_cap

    def design_filter(self, channel: ChannelRealization, cfg: OfdmConfig,
                      mse_cap: Optional[float] = None) -> SecureFilterSet:
        return design_minpower_filter(channel.h_eff, cfg, self._check_cap(mse_cap))


class MmseFilterAnScheme(MmseFilterCappedScheme):
    """
    Min-power precoder with the residual power sent as artificial noise
    in the null space of Bob's post-CP channel
    """

    def get_scheme_name(self) -> str:
        """Return scheme name"""
        return "mmse_filter_an"

    def get_description(self) -> str:
        return "Min-power precoder meeting Bob's MSE cap, residual power sent as artificial noise"

    def uses_artificial_noise(self) -> bool:
        return True

    def design_filter(self, channel: ChannelRealization, cfg: OfdmConfig,
                      mse_cap: Optional[float] = None) -> SecureFilterSet:
        return design_minpower_filter(channel.h_eff, cfg, self._check_cap(mse_cap),
                                      h_block=channel.h_block)
