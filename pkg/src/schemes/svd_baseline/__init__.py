from .svd_baseline_scheme import SvdBaselineScheme

__all__ = ['SvdBaselineScheme']
