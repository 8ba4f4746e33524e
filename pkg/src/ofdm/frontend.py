"""
QPSK mapping and the time-domain MIMO-OFDM transmission chain
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from channel.channel_model import (
    ChannelRealization,
    ofdm_operators,
    to_antenna_major,
    to_subcarrier_major,
)
from core.config import OfdmConfig
from core.errors import ConfigurationError, InputError


_QPSK_SCALE = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class SymbolFrame:
    """
    One OFDM symbol worth of data

    Attributes:
        symbols: N_s*N unit-energy QPSK symbols
        bits: 2*N_s*N source bits, two per symbol
    """

    symbols: np.ndarray
    bits: np.ndarray


@dataclass(frozen=True)
class ReceivedFrame:
    """
    Frequency-domain samples at one receiver, subcarrier-major

    Attributes:
        y: Received vector of length n_rx*N
        noise_var: Noise variance the samples were generated with
    """

    y: np.ndarray
    noise_var: float


def modulate(bits) -> SymbolFrame:
    """
    Gray-mapped QPSK: (b0, b1) -> ((1 - 2*b0) + 1j*(1 - 2*b1)) / sqrt(2)

    Args:
        bits: Vector of 0/1 values with even length

    Returns:
        SymbolFrame holding the symbols and a copy of the bits
    """
    bits = np.asarray(bits)
    if bits.ndim != 1 or bits.size % 2 != 0:
        raise InputError(f"QPSK needs an even-length bit vector, got shape {bits.shape}")
    if not np.all((bits == 0) | (bits == 1)):
        raise InputError("Bit vector may only contain 0 and 1")

    bits = bits.astype(np.int8)
    pairs = bits.reshape(-1, 2)
    symbols = _QPSK_SCALE * ((1 - 2 * pairs[:, 0]) + 1j * (1 - 2 * pairs[:, 1]))
    return SymbolFrame(symbols=symbols.astype(np.complex128), bits=bits)


def demodulate(symbols) -> np.ndarray:
    """Minimum-distance QPSK decisions back to bits"""
    symbols = np.asarray(symbols, dtype=np.complex128).ravel()
    bits = np.empty(2 * symbols.size, dtype=np.int8)
    bits[0::2] = symbols.real < 0
    bits[1::2] = symbols.imag < 0
    return bits


def random_frame(cfg: OfdmConfig, seed: int) -> SymbolFrame:
    """Uniform random bits for one frame, modulated"""
    rng = np.random.default_rng(seed)
    return modulate(rng.integers(0, 2, size=cfg.n_bits, dtype=np.int8))


def _awgn(rng: np.random.Generator, size: int, noise_var: float) -> np.ndarray:
    return np.sqrt(noise_var / 2.0) * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


def _receive(block: np.ndarray, x_time: np.ndarray, cfg: OfdmConfig, n_rx: int,
             rng: np.random.Generator, noise_var: float) -> ReceivedFrame:
    ops = ofdm_operators(cfg.n_subcarriers, cfg.cp_len, n_rx)
    y = to_subcarrier_major(ops.dft @ (ops.cp_remove @ (block @ x_time)), cfg.n_subcarriers, n_rx)
    if noise_var > 0:
        y = y + _awgn(rng, y.size, noise_var)
    return ReceivedFrame(y=y, noise_var=noise_var)


def transmit(frame: SymbolFrame, w_t: np.ndarray, an: Optional[np.ndarray],
             ch: ChannelRealization, cfg: OfdmConfig, seed: int,
             noise_var: Optional[float] = None) -> Tuple[ReceivedFrame, ReceivedFrame]:
    """
    Send one precoded OFDM symbol to Bob and Eve

    The chain is W_t s -> IFFT -> CP insertion (+ time-domain AN) -> channel
    -> CP removal -> FFT, with independent AWGN at each receiver.

    Args:
        frame: Data symbols, length N_s*N
        w_t: N_A*N x N_s*N transmit filter (subcarrier-major rows)
        an: Optional time-domain artificial noise, length N_A(N+N_cp)
        ch: Channel realization
        cfg: System dimensions
        seed: Seed for the receiver noise
        noise_var: Overrides cfg.noise_var; 0 gives a noiseless chain

    Returns:
        (bob, eve) received frames
    """
    n_tx_samples = cfg.n_tx * cfg.n_subcarriers
    if w_t.shape != (n_tx_samples, cfg.n_symbols):
        raise ConfigurationError(
            f"Transmit filter has shape {w_t.shape}, expected {(n_tx_samples, cfg.n_symbols)}"
        )
    if frame.symbols.shape != (cfg.n_symbols,):
        raise ConfigurationError(
            f"Frame carries {frame.symbols.size} symbols, expected {cfg.n_symbols}"
        )
    if an is not None and an.shape != (cfg.n_tx * cfg.symbol_len,):
        raise ConfigurationError(
            f"Artificial noise has shape {an.shape}, expected {(cfg.n_tx * cfg.symbol_len,)}"
        )

    sigma2 = cfg.noise_var if noise_var is None else float(noise_var)
    if sigma2 < 0:
        raise ConfigurationError(f"noise_var must be >= 0, got {sigma2}")

    tx_ops = ofdm_operators(cfg.n_subcarriers, cfg.cp_len, cfg.n_tx)
    x_freq = to_antenna_major(w_t @ frame.symbols, cfg.n_subcarriers, cfg.n_tx)
    x_time = tx_ops.cp_insert @ (tx_ops.idft @ x_freq)
    if an is not None:
        x_time = x_time + an

    bob_seq, eve_seq = np.random.SeedSequence(seed).spawn(2)
    bob = _receive(ch.h_block, x_time, cfg, cfg.n_rx_bob, np.random.default_rng(bob_seq), sigma2)
    eve = _receive(ch.g_block, x_time, cfg, cfg.n_rx_eve, np.random.default_rng(eve_seq), sigma2)
    return bob, eve
