# Transmit schemes: one sub-package per scheme, registered by SchemeManager
from .base_scheme import BaseSecureScheme, TrialResult, TrialSeeds
from .scheme_manager import SchemeManager

__all__ = ['BaseSecureScheme', 'TrialResult', 'TrialSeeds', 'SchemeManager']
