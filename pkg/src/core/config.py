"""
Static OFDM system dimensions and power settings
"""

import math
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Dict

from .errors import ConfigurationError


DEFAULT_NOISE_VAR = 1.0


def power_db_to_linear(power_db: float) -> float:
    """Convert a power ratio in dB to linear scale"""
    return float(10.0 ** (power_db / 10.0))


def _require_count(name: str, value: Any, minimum: int = 1):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigurationError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ConfigurationError(f"{name} must be >= {minimum}, got {value}")


@dataclass(frozen=True)
class OfdmConfig:
    """
    Dimensions of one MIMO-OFDM wiretap link

    Attributes:
        n_subcarriers: N, number of orthogonal subcarriers
        cp_len: N_cp, cyclic prefix length in samples
        n_tx: N_A, antennas at Alice
        n_rx_bob: N_B, antennas at Bob
        n_rx_eve: N_E, antennas at Eve
        n_streams: N_s, data streams per subcarrier
        n_taps: L, multipath taps per antenna pair
        noise_var: sigma_z^2, complex noise variance per receive sample
        total_power: P_t, total transmit power (linear)
    """

    n_subcarriers: int
    cp_len: int
    n_tx: int
    n_rx_bob: int
    n_rx_eve: int
    n_streams: int
    n_taps: int
    noise_var: float = DEFAULT_NOISE_VAR
    total_power: float = 1.0

    def __post_init__(self):
        self.validate()

    def validate(self):
        """Raise ConfigurationError when a field is out of range"""
        for name in ('n_subcarriers', 'cp_len', 'n_tx', 'n_rx_bob',
                     'n_rx_eve', 'n_streams', 'n_taps'):
            _require_count(name, getattr(self, name))

        if self.n_taps >= self.cp_len:
            raise ConfigurationError(
                f"n_taps ({self.n_taps}) must be smaller than cp_len ({self.cp_len})"
            )
        if self.n_streams > min(self.n_tx, self.n_rx_bob):
            raise ConfigurationError(
                f"n_streams ({self.n_streams}) must not exceed "
                f"min(n_tx, n_rx_bob) = {min(self.n_tx, self.n_rx_bob)}"
            )
        if not self.noise_var > 0:
            raise ConfigurationError(f"noise_var must be positive, got {self.noise_var}")
        if not self.total_power >= 0:
            raise ConfigurationError(f"total_power must be >= 0, got {self.total_power}")

    @property
    def symbol_len(self) -> int:
        """Samples per OFDM symbol including the cyclic prefix"""
        return self.n_subcarriers + self.cp_len

    @property
    def n_symbols(self) -> int:
        """N_s * N, data symbols carried per OFDM symbol"""
        return self.n_streams * self.n_subcarriers

    @property
    def n_bits(self) -> int:
        """QPSK bits per frame"""
        return 2 * self.n_symbols

    @property
    def snr_db(self) -> float:
        """P_t / sigma_z^2 in dB"""
        if self.total_power == 0:
            return float('-inf')
        return 10.0 * math.log10(self.total_power / self.noise_var)

    def with_power_db(self, power_db: float) -> 'OfdmConfig':
        """Copy with P_t set to power_db relative to the noise variance"""
        return replace(self, total_power=self.noise_var * power_db_to_linear(power_db))

    def with_overrides(self, **changes) -> 'OfdmConfig':
        """Validated copy with some fields replaced"""
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'OfdmConfig':
        """
        Build a config from a plain dictionary

        Args:
            data: Field mapping; n_taps defaults to cp_len // 2 and
                noise_var to 1.0 when absent

        Returns:
            Validated OfdmConfig
        """
        if not isinstance(data, dict):
            raise ConfigurationError(f"OFDM config must be an object, got {type(data).__name__}")

        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(f"Unknown OFDM config fields: {', '.join(unknown)}")

        values = dict(data)
        if 'n_taps' not in values and isinstance(values.get('cp_len'), int):
            values['n_taps'] = max(1, values['cp_len'] // 2)

        try:
            return cls(**values)
        except TypeError as e:
            raise ConfigurationError(f"Invalid OFDM config: {e}") from e
