from typing import Optional

from channel.channel_model import ChannelRealization
from core.config import OfdmConfig
from precoding.filters import SecureFilterSet, svd_baseline_filter
from schemes.base_scheme import BaseSecureScheme


class SvdBaselineScheme(BaseSecureScheme):
    """
    Per-subcarrier SVD precoder with equal power, the reference curve
    """

    def get_scheme_name(self) -> str:
        """Return scheme name"""
        return "svd_baseline"

    def get_description(self) -> str:
        return "Per-subcarrier SVD precoder, equal power per stream"

    def design_filter(self, channel: ChannelRealization, cfg: OfdmConfig,
                      mse_cap: Optional[float] = None) -> SecureFilterSet:
        return svd_baseline_filter(channel.h_eff, cfg)
