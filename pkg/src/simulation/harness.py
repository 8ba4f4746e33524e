"""
Monte Carlo sweeps: trials per sweep point, aggregated into curve points
"""

import logging
from dataclasses import asdict, dataclass
from functools import lru_cache
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import binomtest

from core.config import OfdmConfig
from core.errors import ConfigurationError
from schemes.base_scheme import TrialResult, TrialSeeds
from schemes.scheme_manager import SchemeManager

from .scenario import Scenario

logger = logging.getLogger(__name__)

CONFIDENCE_LEVEL = 0.95


@dataclass(frozen=True)
class CurvePoint:
    """
    Aggregated metrics at one sweep value

    Metrics are NaN when every trial at the point was infeasible.
    """

    sweep_value: float
    ber_bob: float
    ber_eve: float
    mse_bob: float
    mse_eve: float
    ci95_bob: float
    ci95_eve: float
    trials_run: int
    mse_bob_analytic: float = float('nan')
    mse_eve_analytic: float = float('nan')
    bit_errors_bob: int = 0
    bit_errors_eve: int = 0
    bits_total: int = 0
    infeasible: bool = False
    diagnostic: str = ''

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def wilson_halfwidth(errors: int, total: int, confidence: float = CONFIDENCE_LEVEL) -> float:
    """Half the width of the Wilson score interval for errors/total"""
    if total <= 0:
        return float('nan')
    ci = binomtest(int(errors), int(total)).proportion_ci(confidence_level=confidence, method='wilson')
    return float(ci.high - ci.low) / 2.0


def aggregate_trials(sweep_value: float, results: Sequence[TrialResult]) -> CurvePoint:
    """
    Reduce trial results, in the given order, to one curve point

    Infeasible trials are counted in the diagnostic and left out of the
    metrics; trials_run is the number of feasible trials.
    """
    feasible = [r for r in results if not r.infeasible]
    n_infeasible = len(results) - len(feasible)

    diagnostic = ''
    if n_infeasible:
        best = np.array([r.best_mse for r in results if r.infeasible])
        diagnostic = (f"{n_infeasible} of {len(results)} trials infeasible, "
                      f"best achievable MSE {best.min():.6g} to {best.max():.6g}")

    if not feasible:
        nan = float('nan')
        return CurvePoint(sweep_value=float(sweep_value), ber_bob=nan, ber_eve=nan, mse_bob=nan,
                          mse_eve=nan, ci95_bob=nan, ci95_eve=nan, trials_run=0,
                          infeasible=True, diagnostic=diagnostic)

    bits = sum(r.bits_total for r in feasible)
    errors_bob = sum(r.bit_errors_bob for r in feasible)
    errors_eve = sum(r.bit_errors_eve for r in feasible)

    def mean(attr):
        return float(np.mean([getattr(r, attr) for r in feasible]))

    return CurvePoint(
        sweep_value=float(sweep_value),
        ber_bob=errors_bob / bits,
        ber_eve=errors_eve / bits,
        mse_bob=mean('mse_bob'),
        mse_eve=mean('mse_eve'),
        ci95_bob=wilson_halfwidth(errors_bob, bits),
        ci95_eve=wilson_halfwidth(errors_eve, bits),
        trials_run=len(feasible),
        mse_bob_analytic=mean('mse_bob_analytic'),
        mse_eve_analytic=mean('mse_eve_analytic'),
        bit_errors_bob=errors_bob,
        bit_errors_eve=errors_eve,
        bits_total=bits,
        infeasible=n_infeasible > 0,
        diagnostic=diagnostic,
    )


@lru_cache(maxsize=1)
def _scheme_manager() -> SchemeManager:
    # one registry per worker process
    return SchemeManager()


def _run_trial_job(job: Tuple[str, OfdmConfig, TrialSeeds, Optional[float], str]) -> TrialResult:
    scheme, cfg, seeds, mse_cap, an_normalization = job
    return _scheme_manager().run_trial(scheme, cfg, seeds, mse_cap=mse_cap,
                                       an_normalization=an_normalization)


def run_scenario(sc: Scenario, workers: int = 1) -> List[CurvePoint]:
    """
    Simulate every sweep point of a scenario

    Trial seeds are derived from (master_seed, sweep index, trial index)
    and results are reduced in trial order, so the output does not depend
    on the worker count.

    Args:
        sc: Scenario to run
        workers: Worker processes; 1 runs in-process

    Returns:
        One CurvePoint per sweep value, in sweep order
    """
    if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
        raise ConfigurationError(f"workers must be an integer >= 1, got {workers!r}")
    if _scheme_manager().get_scheme(sc.scheme) is None:
        raise ConfigurationError(f"Scheme not found: {sc.scheme}")

    logger.info(f"Running {sc.name}: {sc.scheme}, {len(sc.sweep_values)} points x {sc.trials} trials, "
                f"{workers} worker(s)")

    pool = Pool(processes=workers) if workers > 1 else None
    chunksize = max(1, sc.trials // (4 * workers))
    points = []
    try:
        for sweep_index, value in enumerate(sc.sweep_values):
            cfg, mse_cap = sc.config_for_point(value)
            jobs = [(sc.scheme, cfg, TrialSeeds.derive(sc.master_seed, sweep_index, t), mse_cap,
                     sc.an_normalization) for t in range(sc.trials)]

            if pool is not None:
                results = pool.map(_run_trial_job, jobs, chunksize=chunksize)
            else:
                results = [_run_trial_job(job) for job in jobs]

            point = aggregate_trials(value, results)
            points.append(point)

            if point.infeasible:
                logger.warning(f"{sc.name} at {sc.sweep_axis}={value:g}: {point.diagnostic}")
            logger.info(f"{sc.name} [{sweep_index + 1}/{len(sc.sweep_values)}] {sc.sweep_axis}={value:g}: "
                        f"ber_bob={point.ber_bob:.4g} ber_eve={point.ber_eve:.4g}")
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()

    return points


def all_infeasible(points: Sequence[CurvePoint]) -> bool:
    """True when no point has a single feasible trial"""
    return bool(points) and all(p.trials_run == 0 for p in points)
