"""
CSV/JSON result files and the gnuplot helper script
"""

import csv
import json
import logging
import math
from pathlib import Path
from typing import Sequence, Union

from core.errors import ConfigurationError, ResultsWriteError

from .harness import CurvePoint

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('sweep_value', 'ber_bob', 'ci95_bob', 'ber_eve', 'ci95_eve', 'mse_bob', 'mse_eve', 'trials')
RESULT_FORMATS = ('csv', 'json')


def _csv_row(point: CurvePoint):
    # repr keeps every digit of a float
    numbers = (point.sweep_value, point.ber_bob, point.ci95_bob, point.ber_eve,
               point.ci95_eve, point.mse_bob, point.mse_eve)
    return [repr(float(x)) for x in numbers] + [str(point.trials_run)]


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def emit_results(points: Sequence[CurvePoint], path: Union[str, Path], fmt: str = 'csv'):
    """
    Write curve points as CSV or JSON

    CSV has exactly the columns of CSV_COLUMNS, 'trials' being the feasible
    trials behind each point. JSON is a list of objects with every
    CurvePoint field, NaN written as null.

    Raises:
        ResultsWriteError: the file could not be written
    """
    if fmt not in RESULT_FORMATS:
        raise ConfigurationError(f"Unknown result format {fmt!r}, use one of {RESULT_FORMATS}")

    path = Path(path)
    try:
        with open(path, 'w', newline='') as f:
            if fmt == 'csv':
                writer = csv.writer(f, lineterminator='\n')
                writer.writerow(CSV_COLUMNS)
                writer.writerows(_csv_row(p) for p in points)
            else:
                rows = [{k: _json_safe(v) for k, v in p.to_dict().items()} for p in points]
                json.dump(rows, f, indent=2, allow_nan=False)
                f.write('\n')
    except OSError as e:
        logger.error(f"Could not write results to {path}: {e}")
        raise ResultsWriteError(path, e.strerror or str(e)) from e

    logger.info(f"Wrote {len(points)} points to {path}")


def write_plotscript(csv_path: Union[str, Path], script_path: Union[str, Path],
                     title: str = 'BER', xlabel: str = 'sweep value') -> Path:
    """
    Write a gnuplot script plotting Bob's and Eve's BER with error bars

    Args:
        csv_path: CSV written by emit_results, referenced by name
        script_path: Target .gp file
        title: Plot title
        xlabel: x axis label

    Returns:
        Path of the script
    """
    script_path = Path(script_path)
    data = Path(csv_path).name
    lines = [
        "set datafile separator ','",
        "set key autotitle columnhead",
        f"set title '{title}'",
        f"set xlabel '{xlabel}'",
        "set ylabel 'BER'",
        "set logscale y",
        "set grid",
        f"plot '{data}' using 1:2:3 with yerrorlines title 'Bob', \\",
        f"     '{data}' using 1:4:5 with yerrorlines title 'Eve'",
        "",
    ]
    try:
        script_path.write_text('\n'.join(lines))
    except OSError as e:
        raise ResultsWriteError(script_path, e.strerror or str(e)) from e

    logger.info(f"Wrote gnuplot script {script_path}")
    return script_path
