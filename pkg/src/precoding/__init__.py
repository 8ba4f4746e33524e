from .power_allocation import (
    PowerAllocation,
    allocation_mse,
    solve_minpower_mse,
    solve_waterfill_mse,
)
from .artificial_noise import AN_NORMALIZATIONS, an_basis, generate_an
from .filters import (
    SecureFilterSet,
    design_minpower_filter,
    design_mse_filter,
    svd_baseline_filter,
)

__all__ = [
    'PowerAllocation', 'allocation_mse', 'solve_minpower_mse', 'solve_waterfill_mse',
    'AN_NORMALIZATIONS', 'an_basis', 'generate_an',
    'SecureFilterSet', 'design_minpower_filter', 'design_mse_filter', 'svd_baseline_filter',
]
