"""
Scheme Manager - Central registry of the transmit schemes
"""

import logging
from typing import Any, Dict, List, Optional

from core.config import OfdmConfig
from core.errors import ConfigurationError

from .base_scheme import BaseSecureScheme, TrialResult, TrialSeeds


class SchemeManager:
    """
    Manages the available transmit schemes
    """

    def __init__(self):
        self.schemes: Dict[str, BaseSecureScheme] = {}
        self.logger = logging.getLogger(__name__)

        self._initialize_schemes()

    def _initialize_schemes(self):
        """Register all built-in scheme implementations"""
        try:
            from schemes.mmse_filter.mmse_filter_scheme import MmseFilterScheme
            self.register_scheme('mmse_filter', MmseFilterScheme)

            from schemes.svd_baseline.svd_baseline_scheme import SvdBaselineScheme
            self.register_scheme('svd_baseline', SvdBaselineScheme)

            from schemes.artificial_noise.artificial_noise_scheme import (
                MmseFilterAnScheme,
                MmseFilterCappedScheme,
            )
            self.register_scheme('mmse_filter_an', MmseFilterAnScheme)
            self.register_scheme('mmse_filter_capped', MmseFilterCappedScheme)

        except ImportError as e:
            self.logger.warning(f"Some schemes could not be imported: {e}")

    def register_scheme(self, name: str, scheme_class):
        """
        Register a scheme class

        Args:
            name: Scheme name
            scheme_class: Subclass of BaseSecureScheme
        """
        try:
            self.schemes[name] = scheme_class()
            self.logger.debug(f"Registered scheme: {name}")
        except Exception as e:
            self.logger.error(f"Failed to register scheme {name}: {e}")

    def get_scheme(self, name: str) -> Optional[BaseSecureScheme]:
        """Scheme instance by name, None if unknown"""
        return self.schemes.get(name.lower())

    def get_available_schemes(self) -> List[str]:
        """Get list of available scheme names"""
        return list(self.schemes.keys())

    def run_trial(self, scheme_name: str, cfg: OfdmConfig, seeds: TrialSeeds,
                  mse_cap: Optional[float] = None, an_normalization: str = 'exact') -> TrialResult:
        """
        Run one Monte Carlo trial with a named scheme

        Raises:
            ConfigurationError: unknown scheme, or a cap-driven scheme without a cap
        """
        scheme = self.get_scheme(scheme_name)
        if not scheme:
            raise ConfigurationError(
                f"Scheme not found: {scheme_name} (available: {', '.join(self.schemes)})"
            )
        if scheme.requires_mse_cap() and mse_cap is None:
            raise ConfigurationError(f"Scheme {scheme_name} needs an MSE cap")

        return scheme.run_trial(cfg, seeds, mse_cap=mse_cap, an_normalization=an_normalization)

    def get_scheme_status(self, scheme_name: str) -> Dict[str, Any]:
        """
        Get capability information for a scheme

        Args:
            scheme_name: Scheme name

        Returns:
            Dict containing scheme status
        """
        scheme = self.get_scheme(scheme_name)
        if not scheme:
            return {'exists': False, 'error': 'Scheme not found'}

        return {'exists': True, **scheme.get_status()}

    def get_all_scheme_status(self) -> Dict[str, Dict[str, Any]]:
        """Get status for all registered schemes"""
        return {name: self.get_scheme_status(name) for name in self.schemes}

    def __str__(self):
        """String representation"""
        return f"SchemeManager with schemes: {', '.join(self.schemes.keys())}"
