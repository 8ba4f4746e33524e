"""
Exception hierarchy shared by every simulator layer
"""

from typing import Optional


class SimulationError(Exception):
    """Base class for all simulator errors"""


class ConfigurationError(SimulationError, ValueError):
    """Invalid dimensions, counts or parameter ranges"""


class InputError(SimulationError, ValueError):
    """Malformed caller data (bit vectors, symbol frames)"""


class NumericalError(SimulationError, ArithmeticError):
    """A decomposition or factorization failed"""


class InfeasibleMseCapError(SimulationError):
    """
    The MSE cap cannot be met with the available transmit power

    Attributes:
        mse_cap: Requested cap on the total MSE
        best_mse: Lowest total MSE reachable with the full power budget
    """

    def __init__(self, mse_cap: float, best_mse: float):
        self.mse_cap = mse_cap
        self.best_mse = best_mse
        super().__init__(
            f"MSE cap {mse_cap:.6g} is infeasible, best achievable MSE is {best_mse:.6g}"
        )


class ResultsWriteError(SimulationError, OSError):
    """Writing a result or script file failed"""

    def __init__(self, path, reason: Optional[str] = None):
        self.path = str(path)
        message = f"Failed to write {self.path}"
        if reason:
            message += f": {reason}"
        super().__init__(message)
