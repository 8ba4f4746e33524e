from .errors import (
    SimulationError,
    ConfigurationError,
    InputError,
    NumericalError,
    InfeasibleMseCapError,
    ResultsWriteError,
)
from .config import OfdmConfig, power_db_to_linear
from .linalg import SvdResult, svd, null_space, dft_matrix, block_diag

__all__ = [
    'SimulationError', 'ConfigurationError', 'InputError', 'NumericalError',
    'InfeasibleMseCapError', 'ResultsWriteError',
    'OfdmConfig', 'power_db_to_linear',
    'SvdResult', 'svd', 'null_space', 'dft_matrix', 'block_diag',
]
