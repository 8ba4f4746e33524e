from .scenario import (
    CAPPED_SCHEMES,
    DEFAULT_TRIALS,
    SCHEMES,
    SWEEP_AXES,
    Scenario,
    builtin_presets,
)
from .scenario_manager import ScenarioManager
from .harness import CurvePoint, aggregate_trials, all_infeasible, run_scenario, wilson_halfwidth
from .results import CSV_COLUMNS, RESULT_FORMATS, emit_results, write_plotscript

__all__ = [
    'CAPPED_SCHEMES', 'DEFAULT_TRIALS', 'SCHEMES', 'SWEEP_AXES', 'Scenario', 'builtin_presets',
    'ScenarioManager',
    'CurvePoint', 'aggregate_trials', 'all_infeasible', 'run_scenario', 'wilson_halfwidth',
    'CSV_COLUMNS', 'RESULT_FORMATS', 'emit_results', 'write_plotscript',
]
