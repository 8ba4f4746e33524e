from typing import Optional

from channel.channel_model import ChannelRealization
from core.config import OfdmConfig
from precoding.filters import SecureFilterSet, design_mse_filter
from schemes.base_scheme import BaseSecureScheme


class MmseFilterScheme(BaseSecureScheme):
    """
    SVD transmit filter with MSE water-filling over the whole symbol
    """

    def get_scheme_name(self) -> str:
        """Return scheme name"""
        return "mmse_filter"

    def get_description(self) -> str:
        return "Joint SVD precoder, power water-filled to minimize Bob's MSE"

    def design_filter(self, channel: ChannelRealization, cfg: OfdmConfig,
                      mse_cap: Optional[float] = None) -> SecureFilterSet:
        return design_mse_filter(channel.h_eff, cfg)
