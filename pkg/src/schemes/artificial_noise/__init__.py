from .artificial_noise_scheme import MmseFilterAnScheme, MmseFilterCappedScheme

__all__ = ['MmseFilterAnScheme', 'MmseFilterCappedScheme']
