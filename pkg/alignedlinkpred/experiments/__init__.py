from .experiment_spec import ExperimentSpec, read_experiment_spec, DEFAULT_RATIOS
from .experiment_data import write_experiment_data, read_experiment_data, load_experiment_data

from .run_sweep import run_sweep, write_results, read_results
from .run_sweep import RESULT_COLUMNS, FAILURE_COLUMNS

from .experiment_report import experiment_report, report_table, format_report, METRICS
