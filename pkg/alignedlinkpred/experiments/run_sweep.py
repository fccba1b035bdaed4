import os

import numpy as np
import pandas as pd

from joblib import Parallel, delayed
from tqdm import tqdm

from ..networks import partition_users
from ..methods import MethodId, build_link_instances, evaluate_method

RESULT_COLUMNS = ["method", "ratio", "seed", "fold", "auc", "accuracy"]
FAILURE_COLUMNS = ["method", "ratio", "seed", "error"]

_METHOD_ORDER = {method.value: index for index, method in enumerate(MethodId)}


def _run_cell(aligned_pair, spec, ratio, seed):
    rows = list()
    failures = list()

    try:
        partition = partition_users(aligned_pair.target, spec.new_fraction, random_seed=seed)
        prefix = None
        if spec.sampling_diagnostics_directory is not None:
            prefix = os.path.join(spec.sampling_diagnostics_directory,
                                  "sampling_ratio" + "{:.2f}".format(ratio) + "_seed" + str(seed))
        instances = build_link_instances(
            aligned_pair, partition,
            ratio=ratio,
            theta=spec.theta,
            rho=spec.rho,
            include_old=any("old" in m.training_groups for m in spec.methods),
            include_sampled_old=any(m.uses_sampling for m in spec.methods),
            random_seed=seed,
            sampling_diagnostics_prefix=prefix)
    except Exception as error:
        for method in spec.methods:
            failures.append((method.value, ratio, seed, type(error).__name__ + ": " + str(error)))
        return(rows, failures)

    for method in spec.methods:
        try:
            results = evaluate_method(method, instances,
                                      number_of_folds=spec.number_of_folds,
                                      random_seed=seed,
                                      l2_lambda=spec.l2_lambda,
                                      number_of_epochs=spec.number_of_epochs)
        except Exception as error:
            failures.append((method.value, ratio, seed, type(error).__name__ + ": " + str(error)))
            continue
        for fold, fold_auc, fold_accuracy in results:
            rows.append((method.value, ratio, seed, fold,
                         np.nan if fold_auc is None else fold_auc,
                         np.nan if fold_accuracy is None else fold_accuracy))

    return(rows, failures)


def _order_methods(column):
    if column.name == "method":
        return(column.map(_METHOD_ORDER))
    return(column)


def run_sweep(aligned_pair,
              spec,
              verbose=False):
    """
    Evaluate every (method, ratio, seed) cell of an experiment grid.

    One instance table is built per (ratio, seed) and shared by all methods
    of that cell; the partition of new users depends on the seed.  Cells run
    on a pool of ``spec.number_of_jobs`` workers and a failing cell is
    recorded instead of aborting the sweep.  Rows are ordered by method (in
    MethodId order), ratio, seed and fold regardless of completion order.

    Arguments
    ---------
    aligned_pair : AlignedPair
        Full target network and source network.

    spec : ExperimentSpec
        Grid and model parameters.

    verbose : boolean
        Show a progress bar.

    Returns
    -------
    Tuple (results, failures) of pandas DataFrames with columns
    RESULT_COLUMNS and FAILURE_COLUMNS.

    Example
    -------
    >>> results, failures = run_sweep(aligned, read_experiment_spec("sweep.ini"))
    """

    cells = [(ratio, seed) for ratio in sorted(spec.ratios) for seed in sorted(spec.seeds)]

    if verbose == True:
        print("Sweep:  " + str(len(cells)) + " (ratio, seed) cells x " +
              str(len(spec.methods)) + " methods on " + str(spec.number_of_jobs) + " worker(s).")

    outputs = Parallel(n_jobs=spec.number_of_jobs)(
        delayed(_run_cell)(aligned_pair, spec, ratio, seed)
        for ratio, seed in tqdm(cells, desc="Sweep", disable=not verbose))

    rows = [row for cell_rows, _ in outputs for row in cell_rows]
    failures = [failure for _, cell_failures in outputs for failure in cell_failures]

    results = pd.DataFrame(rows, columns=RESULT_COLUMNS)
    results = results.sort_values(["method", "ratio", "seed", "fold"],
                                  key=_order_methods,
                                  kind="mergesort").reset_index(drop=True)

    failures = pd.DataFrame(failures, columns=FAILURE_COLUMNS)
    failures = failures.sort_values(["method", "ratio", "seed"],
                                    key=_order_methods,
                                    kind="mergesort").reset_index(drop=True)

    if verbose == True and len(failures) > 0:
        print("Sweep:  " + str(len(failures)) + " failed cell(s).")

    return(results, failures)


def write_results(results,
                  file_name):
    """Write a results table as CSV; undefined metrics become empty fields."""

    directory = os.path.dirname(file_name)
    if directory != "" and not os.path.exists(directory):
        os.makedirs(directory)
    results.to_csv(file_name, columns=list(results.columns), index=False, na_rep="")


def read_results(file_name):
    """
    Read a results CSV written by write_results.

    Raises ValueError when a column is missing or a value does not parse.
    """

    results = pd.read_csv(file_name)
    missing = [column for column in RESULT_COLUMNS if column not in results.columns]
    if len(missing) > 0:
        raise ValueError(file_name + ": missing column(s) " + ", ".join(missing) + ".")

    results = results[RESULT_COLUMNS].copy()
    results["method"] = results["method"].astype(str)
    try:
        results["ratio"] = pd.to_numeric(results["ratio"], errors="raise").astype(float)
        results["seed"] = pd.to_numeric(results["seed"], errors="raise").astype(int)
        results["fold"] = pd.to_numeric(results["fold"], errors="raise").astype(int)
        for metric in ("auc", "accuracy"):
            results[metric] = pd.to_numeric(results[metric], errors="raise").astype(float)
    except (TypeError, ValueError) as error:
        raise ValueError(file_name + ": malformed results (" + str(error) + ").") from None

    return(results)
