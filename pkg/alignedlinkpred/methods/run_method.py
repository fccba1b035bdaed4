import enum
import os

from dataclasses import dataclass

import numpy as np

from ..learn import train_linear_model, auc, accuracy, kfold_split
from .link_instances import build_link_instances


class MethodId(enum.Enum):
    """
    Link prediction methods compared in the experiments.
    """

    SCAN_PS = "SCAN_PS"
    SCAN = "SCAN"
    SRC_ONLY = "SRC_ONLY"
    TRAD_PS = "TRAD_PS"
    TRAD = "TRAD"
    OLD_ONLY_PS = "OLD_ONLY_PS"
    OLD_ONLY = "OLD_ONLY"
    NEW_ONLY = "NEW_ONLY"
    NAIVE = "NAIVE"
    CN = "CN"
    JC = "JC"
    AA = "AA"

    @classmethod
    def parse(cls, name):
        key = str(name).strip().upper().replace("-", "_")
        try:
            return(cls(key))
        except ValueError:
            raise ValueError("Unknown method " + str(name) + ".") from None

    @property
    def kind(self):
        if self in _UNSUPERVISED_COLUMNS:
            return("unsupervised")
        if self is MethodId.NAIVE:
            return("naive")
        return("supervised")

    @property
    def layout_id(self):
        return(_LAYOUTS.get(self))

    @property
    def training_groups(self):
        """Instance groups the training folds are drawn from."""
        return(_TRAINING_GROUPS.get(self, ()))

    @property
    def uses_sampling(self):
        return("old-sampled" in self.training_groups)


_LAYOUTS = {MethodId.SCAN_PS: "merged-39",
            MethodId.SCAN: "merged-39",
            MethodId.SRC_ONLY: "source-19",
            MethodId.TRAD_PS: "target-19",
            MethodId.TRAD: "target-19",
            MethodId.OLD_ONLY_PS: "target-19",
            MethodId.OLD_ONLY: "target-19",
            MethodId.NEW_ONLY: "target-19"}

_TRAINING_GROUPS = {MethodId.SCAN_PS: ("new", "old-sampled"),
                    MethodId.SCAN: ("new", "old"),
                    MethodId.SRC_ONLY: ("new",),
                    MethodId.TRAD_PS: ("new", "old-sampled"),
                    MethodId.TRAD: ("new", "old"),
                    MethodId.OLD_ONLY_PS: ("old-sampled",),
                    MethodId.OLD_ONLY: ("old",),
                    MethodId.NEW_ONLY: ("new",)}

# Column of the raw statistic in the merged-39 vector (target block).
_UNSUPERVISED_COLUMNS = {MethodId.CN: 0, MethodId.JC: 1, MethodId.AA: 2}

PSEUDO_LABEL_COLUMN = 38


@dataclass
class MethodConfig:
    """
    One method evaluated at one remaining-information ratio.
    """

    method: MethodId
    theta: float = 0.1
    rho: float = 0.5
    ratio: float = 0.0
    seeds: tuple = (0,)
    number_of_folds: int = 5
    l2_lambda: float = 1e-3
    number_of_epochs: int = 500

    def __post_init__(self):
        if not isinstance(self.method, MethodId):
            self.method = MethodId.parse(self.method)
        self.seeds = tuple(int(seed) for seed in self.seeds)
        if not (0.0 <= self.ratio <= 1.0):
            raise ValueError("ratio must lie in [0, 1].")
        if not (0.0 < self.rho <= 1.0):
            raise ValueError("rho must lie in (0, 1].")
        if self.theta < 0.0:
            raise ValueError("theta must be non-negative.")
        if self.number_of_folds < 2:
            raise ValueError("number_of_folds must be at least 2.")
        if len(self.seeds) == 0:
            raise ValueError("At least one seed is required.")


def evaluate_method(method,
                    instances,
                    number_of_folds=5,
                    random_seed=None,
                    l2_lambda=1e-3,
                    number_of_epochs=500):
    """
    Cross-validate one method on a prepared instance table.

    The "new" rows are split into stratified folds; each fold is tested once
    while the method's training groups (new rows outside the test fold,
    old rows in full) train the model.

    Returns
    -------
    List of (fold, auc, accuracy) tuples; undefined metrics are None.
    """

    if not isinstance(method, MethodId):
        method = MethodId.parse(method)

    new_rows = instances.indices("new")
    folds = kfold_split(instances.labels[new_rows], k=number_of_folds, random_seed=random_seed)

    results = list()
    for fold_index, fold in enumerate(folds):
        test_rows = new_rows[fold]
        test_labels = instances.labels[test_rows]

        if method.kind == "unsupervised":
            scores = instances.features[test_rows, _UNSUPERVISED_COLUMNS[method]]
            results.append((fold_index, auc(scores, test_labels), None))
            continue

        if method.kind == "naive":
            predictions = (instances.features[test_rows, PSEUDO_LABEL_COLUMN] > 0.5).astype(int)
            results.append((fold_index, None, accuracy(predictions, test_labels)))
            continue

        training_rows = list()
        for group in method.training_groups:
            if group == "new":
                training_rows.append(np.delete(new_rows, fold))
            else:
                training_rows.append(instances.indices(group))
        training_rows = np.concatenate(training_rows)

        model = train_linear_model(instances.layout(method.layout_id, training_rows),
                                   instances.labels[training_rows],
                                   l2_lambda=l2_lambda,
                                   number_of_epochs=number_of_epochs,
                                   layout_id=method.layout_id)
        scores = model.score(instances.layout(method.layout_id, test_rows))
        results.append((fold_index,
                        auc(scores, test_labels),
                        accuracy((scores > 0.0).astype(int), test_labels)))

    return(results)


def run_method(aligned_pair,
               partition,
               config,
               sampling_diagnostics_directory=None,
               verbose=False):
    """
    Evaluate one method with k-fold cross validation for every seed.

    Arguments
    ---------
    aligned_pair : AlignedPair
        Full target network and source network.

    partition : UserPartition
        New/old split of the target users.

    config : MethodConfig
        Method, ratio, sampling parameters, seeds and number of folds.

    sampling_diagnostics_directory : string
        If given, personalized sampling vectors and traces are written there.

    verbose : boolean
        Print progress to the screen.

    Returns
    -------
    List of dicts with keys method, ratio, seed, fold, auc, accuracy.

    Example
    -------
    >>> rows = run_method(aligned, partition, MethodConfig(MethodId.CN, ratio=0.0))
    >>> rows[0]["auc"]
    0.5
    """

    method = config.method
    rows = list()
    for seed in config.seeds:
        if verbose == True:
            print("Run method:  " + method.value + " at ratio " + str(config.ratio) +
                  " with seed " + str(seed) + ".")

        prefix = None
        if sampling_diagnostics_directory is not None and method.uses_sampling:
            prefix = os.path.join(sampling_diagnostics_directory, "sampling_ratio" +
                                  "{:.2f}".format(config.ratio) + "_seed" + str(seed))

        instances = build_link_instances(aligned_pair, partition,
                                         ratio=config.ratio,
                                         theta=config.theta,
                                         rho=config.rho,
                                         include_old="old" in method.training_groups,
                                         include_sampled_old=method.uses_sampling,
                                         random_seed=seed,
                                         sampling_diagnostics_prefix=prefix,
                                         verbose=verbose)

        for fold, fold_auc, fold_accuracy in evaluate_method(method, instances,
                                                             number_of_folds=config.number_of_folds,
                                                             random_seed=seed,
                                                             l2_lambda=config.l2_lambda,
                                                             number_of_epochs=config.number_of_epochs):
            rows.append({"method": method.value,
                         "ratio": config.ratio,
                         "seed": seed,
                         "fold": fold,
                         "auc": fold_auc,
                         "accuracy": fold_accuracy})

    return(rows)
