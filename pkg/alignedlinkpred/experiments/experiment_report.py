import numpy as np
import pandas as pd

from ..methods import MethodId

METRICS = ("auc", "accuracy")

MISSING_CELL = "—"

_METHOD_ORDER = {method.value: index for index, method in enumerate(MethodId)}


def _method_rank(method):
    return((_METHOD_ORDER.get(method, len(_METHOD_ORDER)), method))


def experiment_report(results):
    """
    Aggregate per-fold results into mean and standard deviation per
    (method, ratio).

    Standard deviations are population deviations (ddof = 0).  ``<metric>_std``
    runs over all seeds and folds of a cell, ``<metric>_seed_std`` over the
    per-seed fold means.  Metrics a method does not define stay NaN.

    Arguments
    ---------
    results : pandas DataFrame
        Columns method, ratio, seed, fold, auc, accuracy.

    Returns
    -------
    pandas DataFrame with one row per (method, ratio), methods in MethodId
    order and ratios ascending.

    Example
    -------
    >>> report = experiment_report(read_results("results/results.csv"))
    >>> report.loc[0, "auc_mean"]
    0.6
    """

    keys = ["method", "ratio"]
    grouped = results.groupby(keys)

    report = grouped.size().rename("runs").to_frame()
    for metric in METRICS:
        report[metric + "_mean"] = grouped[metric].mean()
        report[metric + "_std"] = grouped[metric].std(ddof=0)
        seed_means = results.groupby(keys + ["seed"])[metric].mean()
        report[metric + "_seed_std"] = seed_means.groupby(level=keys).std(ddof=0)

    report = report.reset_index()
    order = sorted(range(len(report)),
                   key=lambda i: (_method_rank(report.loc[i, "method"]), report.loc[i, "ratio"]))
    return(report.iloc[order].reset_index(drop=True))


def _format_cell(mean, std):
    if pd.isna(mean):
        return(MISSING_CELL)
    if pd.isna(std):
        std = 0.0
    return("{:.3f}".format(mean) + "±" + "{:.3f}".format(std))


def report_table(report,
                 metric="auc"):
    """
    Table of formatted "mean±std" cells: rows are methods, columns ratios.
    """

    if metric not in METRICS:
        raise ValueError("Unknown metric " + str(metric) + ".")

    methods = sorted(report["method"].unique(), key=_method_rank)
    ratios = sorted(report["ratio"].unique())

    table = pd.DataFrame(MISSING_CELL, index=pd.Index(methods, name="method"),
                         columns=["{:.1f}".format(r) if np.isclose(r, round(r, 1)) else repr(r)
                                  for r in ratios])
    for row in report.itertuples(index=False):
        column = ratios.index(row.ratio)
        table.iloc[methods.index(row.method), column] = _format_cell(getattr(row, metric + "_mean"),
                                                                    getattr(row, metric + "_std"))
    return(table)


def format_report(report,
                  metric="auc"):
    """
    Plain-text rendering of report_table with a header naming the metric and
    the deviation convention.
    """

    table = report_table(report, metric)

    header = ["method"] + list(table.columns)
    lines = [header] + [[method] + list(table.loc[method]) for method in table.index]
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]

    text = ["# " + metric.upper() + ": mean±std over seeds and folds (population std, ddof=0); " +
            MISSING_CELL + " = undefined for the method"]
    for line in lines:
        text.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())

    return("\n".join(text) + "\n")
