import numpy as np

from .heterogeneous_network import HeterogeneousNetwork


def _number_retained(ratio, number_of_items):
    return(int(np.floor(ratio * number_of_items + 0.5)))


def withhold_information(network,
                         new_users,
                         ratio,
                         random_seed=None):
    """
    Hide part of the information of new users.

    Each new user keeps ``ratio`` of their social links and of each of their
    location, time and word event multisets (rounded half up).  The items kept
    are the leading entries of a per-user random permutation that depends only
    on the seed and the user, so for a fixed seed the retained sets are nested
    across ratios.  A link between two new users is kept iff the endpoint with
    the lower id selected it; links to old users follow the new endpoint.  A
    new user without lower-id new neighbours therefore keeps exactly
    round(ratio * degree) links.  Old users are untouched.

    Arguments
    ---------
    network : HeterogeneousNetwork
        Full target network.

    new_users : iterable of integers
        Users whose information is withheld.

    ratio : float
        Remaining information ratio in [0, 1].

    random_seed : integer
        Seed for the per-user permutations.

    Returns
    -------
    HeterogeneousNetwork

    Example
    -------
    >>> visible = withhold_information(target, partition.new_users, 0.3, random_seed=1)
    """

    if not (0.0 <= ratio <= 1.0):
        raise ValueError("ratio must lie in [0, 1].")

    new_users = set(new_users)
    for u in new_users:
        network.check_user(u)

    if ratio == 1.0:
        return(network)

    if random_seed is None:
        random_seed = int(np.random.default_rng().integers(2**31 - 1))

    kept_partners = dict()
    kept_events = {"location": dict(), "time": dict(), "word": dict()}

    for u in sorted(new_users):
        random_generator = np.random.default_rng([random_seed, network.user_index(u)])

        partners = sorted(network.neighbors(u))
        order = random_generator.permutation(len(partners))
        number_kept = _number_retained(ratio, len(partners))
        kept_partners[u] = set(partners[i] for i in order[:number_kept])

        for channel in ("location", "time", "word"):
            items = network.events(channel, u)
            order = random_generator.permutation(len(items))
            number_kept = _number_retained(ratio, len(items))
            kept_indices = sorted(order[:number_kept])
            kept_events[channel][u] = [items[i] for i in kept_indices]

    # u < v; a new-new link is decided by its lower-id endpoint.
    links = list()
    for u, v in network.links():
        if u in kept_partners:
            if v in kept_partners[u]:
                links.append((u, v))
        elif v in kept_partners:
            if u in kept_partners[v]:
                links.append((u, v))
        else:
            links.append((u, v))

    events = dict()
    for channel in ("location", "time", "word"):
        events[channel] = dict()
        for u in network.users:
            if u in new_users:
                events[channel][u] = kept_events[channel][u]
            else:
                events[channel][u] = network.events(channel, u)

    return(HeterogeneousNetwork(network.users, links,
                                location_events=events["location"],
                                time_events=events["time"],
                                word_events=events["word"]))
