#!/usr/bin/env python3
"""
Secure MIMO-OFDM - Main CLI Application
Monte Carlo BER/MSE sweeps for MMSE transmit filtering and artificial noise
"""

import sys
from pathlib import Path

# Add src directory to Python path
project_root = Path(__file__).parent.parent
src_path = project_root / "src"
sys.path.insert(0, str(src_path))

import argparse
import logging
from typing import List, Optional

from core.errors import SimulationError
from precoding.artificial_noise import AN_NORMALIZATIONS
from schemes import SchemeManager
from simulation import (
    RESULT_FORMATS,
    ScenarioManager,
    all_infeasible,
    emit_results,
    run_scenario,
    write_plotscript,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2

AXIS_LABELS = {
    'transmit_power_db': 'P_t / sigma_z^2 (dB)',
    'per_stream_power_db': 'P_t / (N_s N) (dB)',
    'n_tx_antennas': 'N_A',
    'mse_cap': 'gamma_b',
}


def setup_logging(verbose: bool = False, log_file: Optional[str] = None):
    """Setup logging configuration"""
    level = logging.DEBUG if verbose else logging.INFO
    handlers = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def list_scenarios(manager: ScenarioManager):
    """List built-in presets and stored scenario files"""
    print("Built-in Scenarios:")
    print("=" * 19)
    for sc in manager.list_presets():
        print(f"{sc.name:<24} {sc.scheme:<20} {sc.sweep_axis:<20} {sc.description}")

    stored = manager.list_scenario_files()
    if stored:
        print()
        print(f"Stored in {manager.scenarios_path}:")
        for name in stored:
            print(f"  {name}")
    print()


def list_schemes(manager: SchemeManager):
    """List registered transmit schemes"""
    print("Available Schemes:")
    print("=" * 18)
    for name, info in manager.get_all_scheme_status().items():
        flags = []
        if info['uses_artificial_noise']:
            flags.append('AN')
        if info['requires_mse_cap']:
            flags.append('MSE cap')
        print(f"{name:<20} [{', '.join(flags) or '-'}] {info['description']}")
    print()


def simulate(args) -> int:
    """Run a scenario and write its results"""
    manager = ScenarioManager()
    scenario = manager.load_scenario(args.scenario)

    overrides = {}
    if args.trials is not None:
        overrides['trials'] = args.trials
    if args.seed is not None:
        overrides['master_seed'] = args.seed
    if args.an_normalization is not None:
        overrides['an_normalization'] = args.an_normalization
    if overrides:
        scenario = scenario.with_overrides(**overrides)

    out = Path(args.out) if args.out else Path(f"{scenario.name}.{args.format}")
    print(f"Simulating {scenario.name}: {scenario.scheme}, {len(scenario.sweep_values)} points, "
          f"{scenario.trials} trials per point")

    points = run_scenario(scenario, workers=args.workers)
    emit_results(points, out, args.format)
    print(f"Results written to {out}")

    if args.emit_plotscript:
        if args.format != 'csv':
            logging.getLogger(__name__).warning("Plot script needs CSV results, skipped")
        else:
            script = write_plotscript(out, out.with_suffix('.gp'), title=scenario.name,
                                      xlabel=AXIS_LABELS[scenario.sweep_axis])
            print(f"Plot script written to {script}")

    if all_infeasible(points):
        print("WARNING: every sweep point was infeasible for the MSE cap")
        return EXIT_INFEASIBLE
    for point in points:
        if point.infeasible:
            print(f"WARNING {scenario.sweep_axis}={point.sweep_value:g}: {point.diagnostic}")
    return EXIT_OK


def export_scenario(args) -> int:
    """Write a preset to a scenario file"""
    manager = ScenarioManager()
    if not manager.export_preset(args.name, args.path):
        print(f"FAILED: could not write {args.path}")
        return EXIT_ERROR
    print(f"SUCCESS: {args.name} exported to {args.path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Secure MIMO-OFDM - BER/MSE simulator for Bob and Eve",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Enable verbose logging')
    parser.add_argument('--log-file', help='Also write the log to this file')

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    # Simulate command
    sim_parser = subparsers.add_parser('simulate', help='Run a scenario sweep')
    sim_parser.add_argument('--scenario', '-s', required=True,
                            help='Preset name, stored scenario name or scenario JSON file')
    sim_parser.add_argument('--trials', '-k', type=int, help='Trials per sweep point')
    sim_parser.add_argument('--seed', type=int, help='Master seed')
    sim_parser.add_argument('--out', '-o', help='Result file (default <scenario>.<format>)')
    sim_parser.add_argument('--format', '-f', choices=RESULT_FORMATS, default='csv',
                            help='Result format')
    sim_parser.add_argument('--workers', '-w', type=int, default=1, help='Worker processes')
    sim_parser.add_argument('--emit-plotscript', action='store_true',
                            help='Write a gnuplot script next to the CSV')
    sim_parser.add_argument('--an-normalization', choices=AN_NORMALIZATIONS,
                            help='Artificial-noise power scaling')

    # Scenario command
    scenario_parser = subparsers.add_parser('scenario', help='Manage scenarios')
    scenario_sub = scenario_parser.add_subparsers(dest='scenario_command', required=True)
    scenario_sub.add_parser('list', help='List built-in presets and stored scenarios')
    export_parser = scenario_sub.add_parser('export', help='Write a preset as a scenario file')
    export_parser.add_argument('name', help='Preset name')
    export_parser.add_argument('path', help='Target JSON file')

    # Schemes command
    subparsers.add_parser('schemes', help='List transmit schemes')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI function"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_OK

    # Setup logging
    setup_logging(args.verbose, args.log_file)

    try:
        if args.command == 'simulate':
            return simulate(args)

        elif args.command == 'scenario':
            if args.scenario_command == 'list':
                list_scenarios(ScenarioManager())
                return EXIT_OK
            return export_scenario(args)

        elif args.command == 'schemes':
            list_schemes(SchemeManager())
            return EXIT_OK

    except (SimulationError, OSError) as e:
        print(f"Error: {e}")
        return EXIT_ERROR

    return EXIT_OK


if __name__ == '__main__':
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nOperation cancelled by user")
        sys.exit(1)
