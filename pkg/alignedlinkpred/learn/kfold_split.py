import numpy as np

from sklearn.model_selection import StratifiedKFold


def kfold_split(labels,
                k=5,
                random_seed=None):
    """
    Stratified k-fold partition of instance indices.

    Every class is spread over the folds so that per-class fold sizes differ
    by at most one.  The assignment is deterministic for a fixed seed.

    Arguments
    ---------
    labels : array-like
        Binary label per instance.

    k : integer
        Number of folds, at least 2.

    random_seed : integer
        Seed of the shuffle preceding the split.

    Returns
    -------
    List of k disjoint, sorted index arrays whose union is range(len(labels)).

    Example
    -------
    >>> folds = kfold_split([0, 1] * 50, k=5, random_seed=0)
    >>> [len(fold) for fold in folds]
    [20, 20, 20, 20, 20]
    """

    labels = np.asarray(labels)

    if k < 2:
        raise ValueError("k must be at least 2.")
    if labels.ndim != 1:
        raise ValueError("labels must be a vector.")
    if labels.size < k:
        raise ValueError("Need at least k instances.")

    classes, counts = np.unique(labels, return_counts=True)
    for label, count in zip(classes, counts):
        if count < k:
            raise ValueError("Class " + str(label) + " has " + str(count) +
                             " instances, fewer than k = " + str(k) + ".")

    splitter = StratifiedKFold(n_splits=k, shuffle=True, random_state=random_seed)
    folds = [np.sort(test_index) for _, test_index in
             splitter.split(np.zeros((labels.size, 1)), labels)]

    return(folds)
