import numpy as np


def project_simplex(v):
    """
    Euclidean projection onto the probability simplex.

    Solves min_w 0.5 * ||w - v||^2 subject to sum(w) = 1 and w >= 0 by
    sorting v in decreasing order and thresholding at the Lagrange multiplier
    of the sum constraint (O(n log n)).

    Arguments
    ---------
    v : array-like
        Finite vector of length at least 1.

    Returns
    -------
    Numpy array on the simplex.

    Example
    -------
    >>> project_simplex([0.5, 0.8])
    array([0.35, 0.65])
    """

    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("Only vectors can be projected.")
    if v.size == 0:
        raise ValueError("Cannot project an empty vector.")
    if not np.all(np.isfinite(v)):
        raise ValueError("Cannot project a vector with non-finite entries.")

    n = v.size
    u = np.sort(v)[::-1]
    cumulative_sum = np.cumsum(u)
    rho = np.nonzero(u * np.arange(1, n + 1) > (cumulative_sum - 1.0))[0][-1]
    threshold = (cumulative_sum[rho] - 1.0) / (rho + 1.0)
    w = np.clip(v - threshold, 0.0, None)

    return(w)
