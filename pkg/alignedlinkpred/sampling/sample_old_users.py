import math

import numpy as np


def sample_old_users(old_subnetwork,
                     delta,
                     rho=0.5,
                     random_seed=None):
    """
    Realize a sampling distribution as a subnetwork of old users.

    k = ceil(rho * n) users are drawn without replacement with weights delta.
    Users with zero weight are drawn, uniformly, only when fewer than k users
    carry positive weight.  The induced subnetwork keeps the links among the
    retained users and all of their events.

    Arguments
    ---------
    old_subnetwork : HeterogeneousNetwork
        Subnetwork induced by the old users; delta follows its user order.

    delta : array-like
        Sampling rate distribution on the simplex.

    rho : float
        Retained fraction of old users in (0, 1].

    random_seed : integer
        Seed for the weighted draw.

    Returns
    -------
    HeterogeneousNetwork of the retained old users.

    Example
    -------
    >>> sampled = sample_old_users(old_subnetwork, distribution.delta, rho=0.5, random_seed=0)
    """

    if not (0.0 < rho <= 1.0):
        raise ValueError("rho must lie in (0, 1].")

    delta = np.asarray(delta, dtype=np.float64)
    n = old_subnetwork.number_of_users
    if delta.shape != (n,):
        raise ValueError("delta must have one entry per old user.")
    if np.any(delta < -1e-12) or abs(delta.sum() - 1.0) > 1e-6:
        raise ValueError("delta must lie on the probability simplex.")

    number_retained = min(n, int(math.ceil(rho * n - 1e-9)))
    if number_retained == n:
        return(old_subnetwork)

    random_generator = np.random.default_rng(random_seed)

    positive = np.flatnonzero(delta > 0.0)
    if number_retained <= positive.size:
        weights = delta[positive] / delta[positive].sum()
        chosen = random_generator.choice(positive, size=number_retained, replace=False, p=weights)
    else:
        zero = np.flatnonzero(delta <= 0.0)
        filler = random_generator.choice(zero, size=number_retained - positive.size, replace=False)
        chosen = np.concatenate((positive, filler))

    users = old_subnetwork.users
    return(old_subnetwork.subnetwork([users[i] for i in sorted(chosen)]))
