import argparse
import os
import sys

import pandas as pd

from .networks import partition_users, generate_aligned_networks
from .methods import MethodConfig, MethodId, run_method
from .experiments import read_experiment_spec, write_experiment_data, load_experiment_data
from .experiments import run_sweep, write_results, read_results, RESULT_COLUMNS
from .experiments import experiment_report, report_table, format_report, METRICS

EXIT_SUCCESS = 0
EXIT_CELL_FAILURE = 1
EXIT_USAGE = 2


def _float_list(value):
    try:
        return(tuple(float(item) for item in value.split(",") if item.strip() != ""))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated numbers, got '" + value + "'") from None


def _int_list(value):
    try:
        return(tuple(int(item) for item in value.split(",") if item.strip() != ""))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got '" + value + "'") from None


def _method_list(value):
    try:
        return(tuple(MethodId.parse(item) for item in value.split(",") if item.strip() != ""))
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _add_common_arguments(parser):
    parser.add_argument("--config", help="INI file with [data], [generator] and [experiment] sections")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--data", help="data directory written by 'generate' (default: generate in memory)")
    parser.add_argument("--seed", type=_int_list, help="seed or comma-separated seeds")
    parser.add_argument("--verbose", action="store_true", help="print progress")


def _add_experiment_arguments(parser):
    parser.add_argument("--theta", type=float, help="diversity weight of personalized sampling")
    parser.add_argument("--rho", type=float, help="retained fraction of old users")
    parser.add_argument("--ratios", type=_float_list, help="comma-separated remaining information ratios")
    parser.add_argument("--methods", type=_method_list, help="comma-separated method ids")
    parser.add_argument("--folds", type=int, help="number of cross-validation folds")
    parser.add_argument("--jobs", type=int, help="number of sweep workers")
    parser.add_argument("--reverse", action="store_true", default=None,
                        help="swap the roles of target and source network")
    parser.add_argument("--subset-users", dest="subset_users", type=int,
                        help="run on an anchored subset of this many users")
    parser.add_argument("--dump-sampling", dest="dump_sampling",
                        help="directory for personalized sampling diagnostics")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="alignedlinkpred",
        description="Link prediction for new users across aligned heterogeneous networks.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate = subparsers.add_parser("generate", help="write a synthetic aligned network pair")
    _add_common_arguments(generate)

    run = subparsers.add_parser("run", help="evaluate one method and print per-fold rows")
    _add_common_arguments(run)
    _add_experiment_arguments(run)

    sweep = subparsers.add_parser("sweep", help="evaluate the full method x ratio x seed grid")
    _add_common_arguments(sweep)
    _add_experiment_arguments(sweep)

    report = subparsers.add_parser("report", help="aggregate a results CSV into tables")
    report.add_argument("csv_path", help="results CSV written by 'sweep'")
    report.add_argument("--out", help="directory for the report CSV tables")

    return(parser)


def _spec_from_arguments(arguments):
    overrides = {"output_directory": arguments.out,
                 "data_directory": arguments.data}
    if arguments.seed is not None:
        overrides["seeds"] = arguments.seed
        overrides["random_seed"] = min(arguments.seed)
    if hasattr(arguments, "theta"):
        overrides.update({"theta": arguments.theta,
                          "rho": arguments.rho,
                          "ratios": arguments.ratios,
                          "methods": arguments.methods,
                          "number_of_folds": arguments.folds,
                          "number_of_jobs": arguments.jobs,
                          "reverse": arguments.reverse,
                          "number_of_users": arguments.subset_users,
                          "sampling_diagnostics_directory": arguments.dump_sampling})
    return(read_experiment_spec(arguments.config, overrides))


def _write_report(results, directory):
    report = experiment_report(results)
    text = "".join(format_report(report, metric) + "\n" for metric in METRICS)
    if directory is not None:
        if not os.path.exists(directory):
            os.makedirs(directory)
        with open(os.path.join(directory, "report.txt"), "w", encoding="utf-8") as f:
            f.write(text)
        for metric in METRICS:
            report_table(report, metric).to_csv(os.path.join(directory, "report_" + metric + ".csv"))
    return(text)


def command_generate(arguments):
    spec = _spec_from_arguments(arguments)
    aligned_pair = generate_aligned_networks(spec.generator, verbose=arguments.verbose)
    written = write_experiment_data(aligned_pair, spec.output_directory, spec.generator)
    print("Generate:  wrote " + str(len(written)) + " files to " + spec.output_directory + ".")
    return(EXIT_SUCCESS)


def command_run(arguments):
    spec = _spec_from_arguments(arguments)
    aligned_pair = load_experiment_data(spec, verbose=arguments.verbose)

    rows = list()
    for method in spec.methods:
        for ratio in spec.ratios:
            for seed in spec.seeds:
                partition = partition_users(aligned_pair.target, spec.new_fraction, random_seed=seed)
                config = MethodConfig(method, theta=spec.theta, rho=spec.rho, ratio=ratio, seeds=(seed,),
                                      number_of_folds=spec.number_of_folds, l2_lambda=spec.l2_lambda,
                                      number_of_epochs=spec.number_of_epochs)
                rows.extend(run_method(aligned_pair, partition, config,
                                       sampling_diagnostics_directory=spec.sampling_diagnostics_directory,
                                       verbose=arguments.verbose))

    results = pd.DataFrame(rows, columns=RESULT_COLUMNS)
    sys.stdout.write(results.to_csv(index=False, na_rep=""))
    if arguments.out is not None:
        write_results(results, os.path.join(spec.output_directory, "results.csv"))
    return(EXIT_SUCCESS)


def command_sweep(arguments):
    spec = _spec_from_arguments(arguments)
    aligned_pair = load_experiment_data(spec, verbose=arguments.verbose)

    results, failures = run_sweep(aligned_pair, spec, verbose=arguments.verbose)
    write_results(results, os.path.join(spec.output_directory, "results.csv"))
    if len(results) > 0:
        sys.stdout.write(_write_report(results, spec.output_directory))

    if len(failures) > 0:
        failures.to_csv(os.path.join(spec.output_directory, "failures.csv"), index=False)
        for failure in failures.itertuples(index=False):
            sys.stderr.write("Sweep:  " + failure.method + " ratio " + str(failure.ratio) +
                             " seed " + str(failure.seed) + " failed: " + failure.error + "\n")
        return(EXIT_CELL_FAILURE)
    return(EXIT_SUCCESS)


def command_report(arguments):
    results = read_results(arguments.csv_path)
    sys.stdout.write(_write_report(results, arguments.out))
    return(EXIT_SUCCESS)


_COMMANDS = {"generate": command_generate,
             "run": command_run,
             "sweep": command_sweep,
             "report": command_report}


def main(argv=None):
    """
    Entry point of the ``alignedlinkpred`` command.

    Returns 0 on success, 1 when a sweep cell failed and 2 on usage or input
    errors.
    """

    parser = build_parser()
    try:
        arguments = parser.parse_args(argv)
    except SystemExit as error:
        return(EXIT_SUCCESS if error.code == 0 else EXIT_USAGE)

    try:
        return(_COMMANDS[arguments.command](arguments))
    except (ValueError, OSError) as error:
        sys.stderr.write("alignedlinkpred " + arguments.command + ": " + str(error) + "\n")
        return(EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
