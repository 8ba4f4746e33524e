from .mmse_filter_scheme import MmseFilterScheme

__all__ = ['MmseFilterScheme']
