"""
Scenario definitions: what to sweep, with which scheme, how many trials
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Tuple

import numpy as np

from core.config import OfdmConfig, power_db_to_linear
from core.errors import ConfigurationError
from precoding.artificial_noise import AN_NORMALIZATIONS


SCHEMES = ('mmse_filter', 'svd_baseline', 'mmse_filter_an', 'mmse_filter_capped')
CAPPED_SCHEMES = ('mmse_filter_an', 'mmse_filter_capped')
SWEEP_AXES = ('transmit_power_db', 'per_stream_power_db', 'n_tx_antennas', 'mse_cap')
DEFAULT_TRIALS = 10_000


@dataclass(frozen=True)
class Scenario:
    """
    One BER/MSE curve to simulate

    Attributes:
        name: Identifier used in file names and listings
        cfg: Base system configuration; the sweep overrides one quantity
        scheme: Transmit scheme name
        sweep_axis: Quantity swept along the curve
        sweep_values: Strictly increasing values of the swept quantity
        mse_cap: gamma_b for the capped schemes (unless it is the swept axis)
        trials: Channel realizations per sweep point
        master_seed: Root of every trial sub-seed
        an_normalization: 'exact' or 'expected' artificial-noise power scaling
        description: Free text for listings
    """

    name: str
    cfg: OfdmConfig
    scheme: str
    sweep_axis: str
    sweep_values: Tuple[float, ...]
    mse_cap: Optional[float] = None
    trials: int = DEFAULT_TRIALS
    master_seed: int = 0
    an_normalization: str = 'exact'
    description: str = field(default='', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'sweep_values', tuple(float(v) for v in self.sweep_values))
        self.validate()

    def validate(self):
        if self.scheme not in SCHEMES:
            raise ConfigurationError(f"Unknown scheme {self.scheme!r}, use one of {SCHEMES}")
        if self.sweep_axis not in SWEEP_AXES:
            raise ConfigurationError(f"Unknown sweep axis {self.sweep_axis!r}, use one of {SWEEP_AXES}")
        if self.an_normalization not in AN_NORMALIZATIONS:
            raise ConfigurationError(
                f"Unknown AN normalization {self.an_normalization!r}, use one of {AN_NORMALIZATIONS}"
            )
        if isinstance(self.trials, bool) or not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigurationError(f"trials must be an integer >= 1, got {self.trials!r}")
        if isinstance(self.master_seed, bool) or not isinstance(self.master_seed, int) or self.master_seed < 0:
            raise ConfigurationError(f"master_seed must be a non-negative integer, got {self.master_seed!r}")

        values = np.asarray(self.sweep_values, dtype=float)
        if values.size == 0:
            raise ConfigurationError("sweep_values must not be empty")
        if not np.all(np.isfinite(values)):
            raise ConfigurationError("sweep_values must be finite")
        if np.any(np.diff(values) <= 0):
            raise ConfigurationError("sweep_values must be strictly increasing")

        if self.sweep_axis == 'n_tx_antennas':
            if np.any(values != np.round(values)):
                raise ConfigurationError("n_tx_antennas sweep values must be integers")
            if values[0] < self.cfg.n_streams:
                raise ConfigurationError(
                    f"n_tx_antennas sweep starts at {values[0]:g}, below n_streams={self.cfg.n_streams}"
                )
        if self.sweep_axis == 'mse_cap' and values[0] <= 0:
            raise ConfigurationError("mse_cap sweep values must be positive")

        if self.scheme in CAPPED_SCHEMES and self.sweep_axis != 'mse_cap':
            if self.mse_cap is None:
                raise ConfigurationError(f"Scheme {self.scheme} needs mse_cap")
            if not self.mse_cap > 0:
                raise ConfigurationError(f"mse_cap must be positive, got {self.mse_cap}")

    def config_for_point(self, value: float) -> Tuple[OfdmConfig, Optional[float]]:
        """
        Configuration and MSE cap at one sweep value

        Returns:
            (cfg, mse_cap) with the swept quantity applied
        """
        cfg = self.cfg
        if self.sweep_axis == 'transmit_power_db':
            return cfg.with_power_db(value), self.mse_cap
        if self.sweep_axis == 'per_stream_power_db':
            power = cfg.n_symbols * cfg.noise_var * power_db_to_linear(value)
            return cfg.with_overrides(total_power=power), self.mse_cap
        if self.sweep_axis == 'n_tx_antennas':
            return cfg.with_overrides(n_tx=int(round(value))), self.mse_cap
        return cfg, float(value)

    def with_overrides(self, **changes) -> 'Scenario':
        """Validated copy with some fields replaced (e.g. trials, master_seed)"""
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'description': self.description,
            'cfg': self.cfg.to_dict(),
            'scheme': self.scheme,
            'sweep_axis': self.sweep_axis,
            'sweep_values': list(self.sweep_values),
            'mse_cap': self.mse_cap,
            'trials': self.trials,
            'master_seed': self.master_seed,
            'an_normalization': self.an_normalization,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Scenario':
        """
        Build a scenario from a parsed scenario file

        Unknown fields are rejected; 'cfg' must be a nested object.
        """
        if not isinstance(data, dict):
            raise ConfigurationError(f"Scenario must be an object, got {type(data).__name__}")

        known = {'name', 'description', 'cfg', 'scheme', 'sweep_axis', 'sweep_values',
                 'mse_cap', 'trials', 'master_seed', 'an_normalization'}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(f"Unknown scenario fields: {', '.join(unknown)}")

        missing = sorted({'cfg', 'scheme', 'sweep_axis', 'sweep_values'} - set(data))
        if missing:
            raise ConfigurationError(f"Scenario is missing fields: {', '.join(missing)}")

        values = dict(data)
        values['cfg'] = OfdmConfig.from_dict(values['cfg'])
        values.setdefault('name', 'scenario')
        if not isinstance(values['sweep_values'], (list, tuple)):
            raise ConfigurationError("sweep_values must be a list")
        try:
            return cls(**values)
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigurationError):
                raise
            raise ConfigurationError(f"Invalid scenario: {e}") from e


def _link(n_subcarriers: int, cp_len: int, n_tx: int = 4) -> OfdmConfig:
    return OfdmConfig(n_subcarriers=n_subcarriers, cp_len=cp_len, n_tx=n_tx, n_rx_bob=2,
                      n_rx_eve=2, n_streams=2, n_taps=cp_len // 2)


def builtin_presets() -> Dict[str, Scenario]:
    """
    Ready-made scenarios for the standard curves

    power_n64_*, power_n128_*: BER vs P_t/sigma_z^2 for N=64 and N=128.
    antennas_*: BER vs N_A. cap_power_*: BER vs per-stream power at gamma_b=10.
    cap_sweep_*: BER vs gamma_b at P_t=50 dB. The cap presets come with (an)
    and without (no_an) artificial noise.
    """
    power_db = tuple(float(x) for x in range(0, 31, 3))
    per_stream_db = tuple(float(x) for x in range(10, 41, 5))
    caps = (1.0, 2.0, 5.0, 10.0, 20.0, 40.0, 80.0)
    n64, n128 = _link(64, 16), _link(128, 32)

    presets = []
    for scheme in ('mmse_filter', 'svd_baseline'):
        presets.append(Scenario(f'power_n64_{scheme}', n64, scheme, 'transmit_power_db', power_db,
                                description=f"BER vs transmit power, N=64, N_cp=16, {scheme}"))
        presets.append(Scenario(f'power_n128_{scheme}', n128, scheme, 'transmit_power_db', power_db,
                                description=f"BER vs transmit power, N=128, N_cp=32, {scheme}"))
        presets.append(Scenario(f'antennas_{scheme}', n64.with_power_db(20.0), scheme, 'n_tx_antennas',
                                tuple(float(n) for n in range(2, 11)),
                                description=f"BER vs Alice antennas at 20 dB, N=64, {scheme}"))

    for scheme, label in (('mmse_filter_an', 'an'), ('mmse_filter_capped', 'no_an')):
        presets.append(Scenario(f'cap_power_{label}', n64, scheme, 'per_stream_power_db', per_stream_db,
                                mse_cap=10.0,
                                description=f"BER vs P_t/(N_s N) at gamma_b=10, {scheme}"))
        presets.append(Scenario(f'cap_sweep_{label}', n64.with_power_db(50.0), scheme, 'mse_cap', caps,
                                description=f"BER vs gamma_b at P_t=50 dB, {scheme}"))

    return {sc.name: sc for sc in presets}
