import numpy as np

from sklearn.metrics import roc_auc_score, accuracy_score


def auc(scores, labels):
    """
    Area under the ROC curve.

    Probability that a random positive outranks a random negative, ties
    counted one half.

    Arguments
    ---------
    scores : array-like
        Real-valued scores, higher meaning more likely positive.

    labels : array-like
        Binary labels in {0, 1}; both classes must be present.

    Returns
    -------
    Float in [0, 1].

    Example
    -------
    >>> auc([0.9, 0.8, 0.2, 0.1], [1, 1, 0, 0])
    1.0
    """

    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels)

    if scores.shape != labels.shape or scores.ndim != 1:
        raise ValueError("scores and labels must be vectors of equal length.")
    if not np.all(np.isin(labels, (0, 1))):
        raise ValueError("labels must be 0 or 1.")
    if np.unique(labels).size < 2:
        raise ValueError("AUC is undefined when only one class is present.")

    return(float(roc_auc_score(labels, scores)))


def accuracy(predictions, labels):
    """
    Fraction of predictions equal to the labels.

    Example
    -------
    >>> accuracy([1, 0, 1, 1], [1, 0, 0, 1])
    0.75
    """

    predictions = np.asarray(predictions)
    labels = np.asarray(labels)

    if predictions.shape != labels.shape or predictions.ndim != 1:
        raise ValueError("predictions and labels must be vectors of equal length.")
    if labels.size == 0:
        raise ValueError("Accuracy needs at least one label.")

    return(float(accuracy_score(labels, predictions)))
