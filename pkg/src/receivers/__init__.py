from .mmse import (
    EqualizerReport,
    analytic_mse,
    equalize_and_score,
    linear_filter_mse,
    mmse_filter,
)

__all__ = ['EqualizerReport', 'analytic_mse', 'equalize_and_score', 'linear_filter_mse', 'mmse_filter']
