import numpy as np

from .heterogeneous_network import UserPartition


def partition_users(network,
                    new_fraction=0.2,
                    random_seed=None):
    """
    Randomly split the users of a network into new and old users.

    Arguments
    ---------
    network : HeterogeneousNetwork
        Target network.

    new_fraction : float
        Fraction of users declared new, in (0, 1).  The number of new users is
        new_fraction * |U| rounded half up.

    random_seed : integer
        Seed for a reproducible split.

    Returns
    -------
    UserPartition

    Example
    -------
    >>> partition = partition_users(target, new_fraction=0.2, random_seed=1)
    """

    if not (0.0 < new_fraction < 1.0):
        raise ValueError("new_fraction must lie in (0, 1).")

    if network.number_of_users == 0:
        raise ValueError("Cannot partition an empty network.")

    users = np.asarray(network.users)
    number_of_new_users = int(np.floor(new_fraction * len(users) + 0.5))

    random_generator = np.random.default_rng(random_seed)
    order = random_generator.permutation(len(users))

    new_users = users[order[:number_of_new_users]].tolist()
    old_users = users[order[number_of_new_users:]].tolist()

    return(UserPartition(new_users, old_users))
