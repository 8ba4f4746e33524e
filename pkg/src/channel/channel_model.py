"""
Multipath Rayleigh MIMO channels and their OFDM effective matrices

A realization holds the Alice-to-Bob and Alice-to-Eve tap sets, the
time-domain block Toeplitz channels (one (N+N_cp)-square Toeplitz block per
antenna pair) and the frequency-domain effective channels

    H_eff = F_{N_B} R_cp H T_cp F_{N_A}^H

computed with explicit operator matrices. Effective channels are stored
subcarrier-major: row/column index n * n_ant + a addresses antenna a on
subcarrier n, so H_eff = blkdiag(H_1, ..., H_N).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Optional

import numpy as np
import scipy.linalg

from core.config import OfdmConfig
from core.errors import ConfigurationError, InputError
from core.linalg import block_diag, dft_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OfdmOperators:
    """
    Per-node OFDM operator matrices, block-diagonal over antennas

    Attributes:
        dft: F_{n_ant}, (n_ant*N) x (n_ant*N)
        idft: F_{n_ant}^H
        cp_insert: T_cp, n_ant*(N+N_cp) x n_ant*N
        cp_remove: R_cp, n_ant*N x n_ant*(N+N_cp)
    """

    dft: np.ndarray
    idft: np.ndarray
    cp_insert: np.ndarray
    cp_remove: np.ndarray


def cp_insertion_matrix(n_subcarriers: int, cp_len: int) -> np.ndarray:
    """(N+N_cp) x N matrix prepending the last N_cp samples"""
    if cp_len > n_subcarriers:
        raise ConfigurationError(f"cp_len ({cp_len}) exceeds n_subcarriers ({n_subcarriers})")
    eye = np.eye(n_subcarriers)
    return np.vstack([eye[n_subcarriers - cp_len:], eye])


def cp_removal_matrix(n_subcarriers: int, cp_len: int) -> np.ndarray:
    """N x (N+N_cp) matrix dropping the first N_cp samples"""
    return np.hstack([np.zeros((n_subcarriers, cp_len)), np.eye(n_subcarriers)])


@lru_cache(maxsize=32)
def ofdm_operators(n_subcarriers: int, cp_len: int, n_antennas: int) -> OfdmOperators:
    """Cached operator matrices for a node with n_antennas antennas"""
    f = dft_matrix(n_subcarriers)
    dft = block_diag([f] * n_antennas)
    ops = OfdmOperators(
        dft=dft,
        idft=dft.conj().T,
        cp_insert=block_diag([cp_insertion_matrix(n_subcarriers, cp_len)] * n_antennas),
        cp_remove=block_diag([cp_removal_matrix(n_subcarriers, cp_len)] * n_antennas),
    )
    for m in (ops.dft, ops.idft, ops.cp_insert, ops.cp_remove):
        m.setflags(write=False)
    return ops


@lru_cache(maxsize=32)
def subcarrier_permutation(n_subcarriers: int, n_antennas: int) -> np.ndarray:
    """
    Index map from subcarrier-major to antenna-major order

    perm[n * n_antennas + a] = a * n_subcarriers + n, so
    x_subcarrier_major = x_antenna_major[perm].
    """
    perm = np.arange(n_antennas * n_subcarriers).reshape(n_antennas, n_subcarriers).T.ravel()
    perm.setflags(write=False)
    return perm


def to_subcarrier_major(x: np.ndarray, n_subcarriers: int, n_antennas: int) -> np.ndarray:
    """Reorder an antenna-major vector to subcarrier-major"""
    return np.asarray(x)[subcarrier_permutation(n_subcarriers, n_antennas)]


def to_antenna_major(x: np.ndarray, n_subcarriers: int, n_antennas: int) -> np.ndarray:
    """Inverse of to_subcarrier_major"""
    x = np.asarray(x)
    out = np.empty_like(x)
    out[subcarrier_permutation(n_subcarriers, n_antennas)] = x
    return out


def toeplitz_block(taps, dim: int) -> np.ndarray:
    """
    Lower-triangular Toeplitz convolution matrix of one antenna pair

    Args:
        taps: Complex impulse response h(1..L)
        dim: Matrix size, normally N + N_cp

    Returns:
        dim x dim matrix with entry (r, c) = taps[r - c] for 0 <= r - c < L
    """
    taps = np.asarray(taps, dtype=np.complex128).ravel()
    if taps.size == 0:
        raise ConfigurationError("Tap vector is empty")
    if taps.size > dim:
        raise ConfigurationError(f"{taps.size} taps do not fit a {dim}x{dim} Toeplitz block")

    first_col = np.zeros(dim, dtype=np.complex128)
    first_col[:taps.size] = taps
    first_row = np.zeros(dim, dtype=np.complex128)
    first_row[0] = taps[0]
    return scipy.linalg.toeplitz(first_col, first_row)


def block_channel(taps: np.ndarray, dim: int) -> np.ndarray:
    """Block MIMO channel [H_{k,i}] from taps indexed (rx, tx, tap)"""
    n_rx, n_tx, _ = taps.shape
    return np.block([[toeplitz_block(taps[k, i], dim) for i in range(n_tx)]
                     for k in range(n_rx)])


def effective_channel(block: np.ndarray, cfg: OfdmConfig, rx_antennas: int) -> np.ndarray:
    """
    Frequency-domain effective channel of a block MIMO channel

    Args:
        block: rx*(N+N_cp) x N_A*(N+N_cp) time-domain channel
        cfg: System dimensions
        rx_antennas: Antennas at the receiving node

    Returns:
        (rx*N) x (N_A*N) matrix in subcarrier-major layout
    """
    expected = (rx_antennas * cfg.symbol_len, cfg.n_tx * cfg.symbol_len)
    if block.shape != expected:
        raise ConfigurationError(f"Channel block has shape {block.shape}, expected {expected}")

    n = cfg.n_subcarriers
    rx_ops = ofdm_operators(n, cfg.cp_len, rx_antennas)
    tx_ops = ofdm_operators(n, cfg.cp_len, cfg.n_tx)
    raw = rx_ops.dft @ rx_ops.cp_remove @ block @ tx_ops.cp_insert @ tx_ops.idft

    rows = subcarrier_permutation(n, rx_antennas)
    cols = subcarrier_permutation(n, cfg.n_tx)
    return raw[np.ix_(rows, cols)]


def subcarrier_blocks(h_eff: np.ndarray, n_subcarriers: int, n_rx: int, n_tx: int) -> np.ndarray:
    """Per-subcarrier blocks of a subcarrier-major effective channel, shape (N, n_rx, n_tx)"""
    if h_eff.shape != (n_subcarriers * n_rx, n_subcarriers * n_tx):
        raise ConfigurationError(
            f"Effective channel has shape {h_eff.shape}, expected "
            f"{(n_subcarriers * n_rx, n_subcarriers * n_tx)}"
        )
    return np.stack([h_eff[n * n_rx:(n + 1) * n_rx, n * n_tx:(n + 1) * n_tx]
                     for n in range(n_subcarriers)])


def off_block_mass_ratio(h_eff: np.ndarray, n_subcarriers: int, n_rx: int, n_tx: int) -> float:
    """Fraction of Frobenius energy outside the per-subcarrier blocks"""
    mask = np.kron(np.eye(n_subcarriers), np.ones((n_rx, n_tx))).astype(bool)
    total = float(np.sum(np.abs(h_eff) ** 2))
    if total == 0.0:
        return 0.0
    return float(np.sum(np.abs(h_eff[~mask]) ** 2)) / total


@dataclass(frozen=True)
class ChannelRealization:
    """
    One draw of the Alice-to-Bob and Alice-to-Eve channels

    Attributes:
        cfg: Dimensions the realization was built for
        taps_bob: (N_B, N_A, L) complex taps
        taps_eve: (N_E, N_A, L) complex taps
        h_block: N_B(N+N_cp) x N_A(N+N_cp) block Toeplitz channel to Bob
        g_block: N_E(N+N_cp) x N_A(N+N_cp) block Toeplitz channel to Eve
        h_eff: N_B*N x N_A*N effective channel to Bob, subcarrier-major
        g_eff: N_E*N x N_A*N effective channel to Eve, subcarrier-major
        seed: Seed the taps were drawn from, None for supplied taps
    """

    cfg: OfdmConfig
    taps_bob: np.ndarray
    taps_eve: np.ndarray
    h_block: np.ndarray
    g_block: np.ndarray
    h_eff: np.ndarray
    g_eff: np.ndarray
    seed: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form: config, seed and taps as [re, im] pairs"""
        def pairs(taps):
            return np.stack([taps.real, taps.imag], axis=-1).tolist()

        return {
            'config': self.cfg.to_dict(),
            'seed': self.seed,
            'taps_bob': pairs(self.taps_bob),
            'taps_eve': pairs(self.taps_eve),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ChannelRealization':
        """Rebuild a realization (and all derived matrices) from to_dict output"""
        try:
            cfg = OfdmConfig.from_dict(data['config'])
            taps = {}
            for key in ('taps_bob', 'taps_eve'):
                arr = np.asarray(data[key], dtype=float)
                taps[key] = arr[..., 0] + 1j * arr[..., 1]
        except (KeyError, IndexError, TypeError, ValueError) as e:
            if isinstance(e, ConfigurationError):
                raise
            raise InputError(f"Malformed channel realization: {e}") from e
        return channel_from_taps(cfg, taps['taps_bob'], taps['taps_eve'], seed=data.get('seed'))


def channel_from_taps(cfg: OfdmConfig, taps_bob, taps_eve,
                      seed: Optional[int] = None) -> ChannelRealization:
    """
    Build a realization from explicit tap arrays

    Args:
        cfg: System dimensions
        taps_bob: (N_B, N_A, L) taps
        taps_eve: (N_E, N_A, L) taps
        seed: Seed recorded with the realization

    Returns:
        ChannelRealization with all derived matrices populated
    """
    taps_bob = np.array(taps_bob, dtype=np.complex128)
    taps_eve = np.array(taps_eve, dtype=np.complex128)
    for label, taps, n_rx in (('taps_bob', taps_bob, cfg.n_rx_bob),
                              ('taps_eve', taps_eve, cfg.n_rx_eve)):
        expected = (n_rx, cfg.n_tx, cfg.n_taps)
        if taps.shape != expected:
            raise ConfigurationError(f"{label} has shape {taps.shape}, expected {expected}")

    h_block = block_channel(taps_bob, cfg.symbol_len)
    g_block = block_channel(taps_eve, cfg.symbol_len)
    for m in (taps_bob, taps_eve, h_block, g_block):
        m.setflags(write=False)

    h_eff = effective_channel(h_block, cfg, cfg.n_rx_bob)
    g_eff = effective_channel(g_block, cfg, cfg.n_rx_eve)
    h_eff.setflags(write=False)
    g_eff.setflags(write=False)

    return ChannelRealization(cfg=cfg, taps_bob=taps_bob, taps_eve=taps_eve,
                              h_block=h_block, g_block=g_block,
                              h_eff=h_eff, g_eff=g_eff, seed=seed)


def _rayleigh_taps(rng: np.random.Generator, shape) -> np.ndarray:
    # uniform power-delay profile, unit total gain per antenna pair
    scale = np.sqrt(1.0 / (2.0 * shape[-1]))
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def draw_channel(cfg: OfdmConfig, seed: int) -> ChannelRealization:
    """
    Draw independent Rayleigh multipath channels to Bob and Eve

    Bob and Eve use independent sub-seeds spawned from seed.

    Args:
        cfg: System dimensions
        seed: Master seed for this realization

    Returns:
        ChannelRealization, bit-identical for identical (cfg, seed)
    """
    bob_seq, eve_seq = np.random.SeedSequence(seed).spawn(2)
    taps_bob = _rayleigh_taps(np.random.default_rng(bob_seq), (cfg.n_rx_bob, cfg.n_tx, cfg.n_taps))
    taps_eve = _rayleigh_taps(np.random.default_rng(eve_seq), (cfg.n_rx_eve, cfg.n_tx, cfg.n_taps))

    realization = channel_from_taps(cfg, taps_bob, taps_eve, seed=seed)
    logger.debug(f"Drew channel realization with seed {seed}")
    return realization
