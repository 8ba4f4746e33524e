"""
Linear MMSE reception at Bob and Eve

Both receivers see y = A s + z with A the cascade H_eff W_t (Bob) or
G_eff W_t (Eve) and apply W = (A A^H + sigma^2 I)^{-1} A. Eve is modelled
as knowing her channel, W_t and sigma^2 exactly.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from core.errors import ConfigurationError, NumericalError
from core.linalg import as_complex_matrix
from ofdm.frontend import ReceivedFrame, SymbolFrame, demodulate


@dataclass(frozen=True)
class EqualizerReport:
    """
    Outcome of equalizing one frame

    Attributes:
        s_hat: Soft symbol estimates W^H y
        mse_analytic: Expected ||s_hat - s||^2 for the applied filter
        mse_empirical: ||s_hat - s||^2 of this frame
        bit_errors: Hard-decision bit errors
        bits_total: Bits in the frame
    """

    s_hat: np.ndarray
    mse_analytic: float
    mse_empirical: float
    bit_errors: int
    bits_total: int

    @property
    def ber(self) -> float:
        return self.bit_errors / self.bits_total if self.bits_total else 0.0


def mmse_filter(cascade, noise_var: float) -> np.ndarray:
    """
    MMSE receive filter (A A^H + sigma^2 I)^{-1} A

    Solved with a Cholesky factorization of the Hermitian positive
    definite regularized Gram matrix.

    Args:
        cascade: Effective channel times transmit filter, rx x streams
        noise_var: sigma^2 > 0

    Returns:
        rx x streams filter W, estimates are W^H y
    """
    if not noise_var > 0:
        raise ConfigurationError(f"MMSE filter needs a positive noise variance, got {noise_var}")
    a = as_complex_matrix(cascade, 'cascade')
    gram = a @ a.conj().T
    gram[np.diag_indices_from(gram)] += noise_var
    try:
        factor = scipy.linalg.cho_factor(gram, lower=True, check_finite=False)
        return scipy.linalg.cho_solve(factor, a, check_finite=False)
    except np.linalg.LinAlgError as e:
        raise NumericalError(
            f"Regularized Gram matrix {gram.shape[0]}x{gram.shape[1]} is not positive definite"
        ) from e


def linear_filter_mse(w, cascade, noise_var: float) -> float:
    """
    Expected ||W^H y - s||^2 for unit-energy uncorrelated symbols

    Tr(W^H A A^H W) + sigma^2 Tr(W^H W) - 2 Re Tr(W^H A) + n_streams
    """
    w = np.asarray(w, dtype=np.complex128)
    a = np.asarray(cascade, dtype=np.complex128)
    if w.shape != a.shape:
        raise ConfigurationError(f"Filter shape {w.shape} does not match cascade shape {a.shape}")

    mse = (np.sum(np.abs(a.conj().T @ w) ** 2)
           + noise_var * np.sum(np.abs(w) ** 2)
           - 2.0 * np.vdot(w, a).real
           + a.shape[1])
    return max(float(mse), 0.0)


def analytic_mse(cascade, noise_var: float) -> float:
    """Total MSE of the MMSE receiver for the given cascade"""
    return linear_filter_mse(mmse_filter(cascade, noise_var), cascade, noise_var)


def equalize_and_score(y: ReceivedFrame, w: np.ndarray, frame: SymbolFrame,
                       cascade: np.ndarray) -> EqualizerReport:
    """
    Apply a receive filter and score it against the sent frame

    Args:
        y: Received samples
        w: Receive filter, estimates are w^H y
        frame: Transmitted symbols and bits
        cascade: Effective channel times transmit filter behind y

    Returns:
        EqualizerReport with analytic and empirical MSE and bit errors
    """
    if w.shape[0] != y.y.size or w.shape[1] != frame.symbols.size:
        raise ConfigurationError(
            f"Filter shape {w.shape} does not fit {y.y.size} samples and {frame.symbols.size} symbols"
        )

    s_hat = w.conj().T @ y.y
    bits_hat = demodulate(s_hat)
    errors = int(np.count_nonzero(bits_hat != frame.bits))
    return EqualizerReport(
        s_hat=s_hat,
        mse_analytic=linear_filter_mse(w, cascade, y.noise_var),
        mse_empirical=float(np.sum(np.abs(s_hat - frame.symbols) ** 2)),
        bit_errors=errors,
        bits_total=int(frame.bits.size),
    )
