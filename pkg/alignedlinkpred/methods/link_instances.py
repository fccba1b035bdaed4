import collections

import numpy as np

from ..networks import AlignedPair, withhold_information
from ..features import FeatureVector, LAYOUTS, extract_link_features
from ..sampling import build_sampling_problem, optimize_sampling_distribution
from ..sampling import sample_old_users, write_sampling_diagnostics

GROUPS = ("new", "old", "old-sampled")

LinkInstance = collections.namedtuple("LinkInstance", ["pair", "features", "label", "group"])


class LinkInstances(object):
    """
    Column-wise table of labeled candidate links.

    Every row carries an ordered user pair, the merged-39 feature vector, a
    binary label and a group: "new" rows involve at least one new user and
    are the only rows that are ever tested; "old" rows are old-old links of
    all old users and "old-sampled" rows those of the personalized sample.

    Arguments
    ---------
    pairs : array-like
        Integer matrix of shape (m, 2).

    features : array-like
        Matrix of shape (m, 39).

    labels : array-like
        Binary labels.

    groups : array-like
        Group name per row.
    """

    def __init__(self, pairs, features, labels, groups):
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        features = np.asarray(features, dtype=np.float64).reshape(-1, len(LAYOUTS["merged-39"]))
        labels = np.asarray(labels, dtype=np.int64)
        groups = np.asarray(groups, dtype=object)

        m = pairs.shape[0]
        if features.shape[0] != m or labels.shape != (m,) or groups.shape != (m,):
            raise ValueError("pairs, features, labels and groups must have one row per instance.")
        if not np.all(np.isin(labels, (0, 1))):
            raise ValueError("labels must be 0 or 1.")
        for group in set(groups):
            if group not in GROUPS:
                raise ValueError("Unknown instance group " + str(group) + ".")

        self.pairs = pairs
        self.features = features
        self.labels = labels
        self.groups = groups

    def __len__(self):
        return(self.labels.size)

    def __getitem__(self, index):
        return(LinkInstance(tuple(int(u) for u in self.pairs[index]),
                            FeatureVector(self.features[index], "merged-39"),
                            int(self.labels[index]),
                            self.groups[index]))

    def indices(self, group):
        return(np.flatnonzero(self.groups == group))

    def layout(self, layout_id, rows=None):
        """Feature matrix of the given layout, optionally restricted to ``rows``."""
        if layout_id not in LAYOUTS:
            raise ValueError("Unknown feature layout " + str(layout_id) + ".")
        columns = list(LAYOUTS[layout_id])
        if rows is None:
            return(self.features[:, columns])
        return(self.features[np.asarray(rows, dtype=np.int64)][:, columns])

    def __repr__(self):
        counts = collections.Counter(self.groups)
        return("LinkInstances(" + ", ".join(g + "=" + str(counts[g]) for g in GROUPS) + ")")


def _ordered_pair(u, v, new_users):
    if (u in new_users) == (v in new_users):
        return((min(u, v), max(u, v)))
    if u in new_users:
        return((u, v))
    return((v, u))


def _sample_non_links(network, users, count, number_of_candidates, accept, random_generator):
    """Draw ``count`` distinct unordered non-links uniformly among pairs accepted by ``accept``."""

    if number_of_candidates < count:
        raise ValueError("Not enough non-links to sample: need " + str(count) +
                         ", have " + str(number_of_candidates) + ".")

    users = sorted(users)
    n = len(users)
    chosen = list()
    seen = set()
    while len(chosen) < count:
        i, j = random_generator.integers(n, size=2)
        if i == j:
            continue
        u, v = users[min(i, j)], users[max(i, j)]
        if (u, v) in seen or not accept(u, v) or network.has_link(u, v):
            continue
        seen.add((u, v))
        chosen.append((u, v))

    return(chosen)


def _old_instances(network, users, random_seed):
    positives = sorted((u, v) for u, v in network.subnetwork(users).links())
    m = len(users)
    negatives = _sample_non_links(network, users, len(positives),
                                  m * (m - 1) // 2 - len(positives),
                                  lambda u, v: True,
                                  np.random.default_rng(random_seed))
    return(positives, negatives)


def build_link_instances(aligned_pair,
                         partition,
                         ratio=0.0,
                         theta=0.1,
                         rho=0.5,
                         include_old=True,
                         include_sampled_old=True,
                         random_seed=None,
                         sampling_diagnostics_prefix=None,
                         verbose=False):
    """
    Labeled candidate links of one (ratio, seed) experiment cell.

    Positives are all target links incident to at least one new user and the
    same number of negatives is drawn uniformly from the non-links incident
    to at least one new user.  Features are extracted on the target network
    after withholding the new users' information at ``ratio``.  Old-user
    training rows hold the old-old links of all old users ("old") and of the
    personalized sample of ``rho`` of the old users ("old-sampled"), each
    with the same number of uniform old-old non-links.

    Arguments
    ---------
    aligned_pair : AlignedPair
        Full target network and source network.

    partition : UserPartition
        New/old split of the target users.

    ratio : float
        Remaining information ratio of the new users.

    theta : float
        Diversity weight of the personalized sampling objective.

    rho : float
        Retained fraction of old users in the personalized sample.

    include_old : boolean
        Add the "old" rows.

    include_sampled_old : boolean
        Run personalized sampling and add the "old-sampled" rows.

    random_seed : integer
        Seed of withholding, negative sampling and old-user sampling.

    sampling_diagnostics_prefix : string
        If given, write the sampling vectors and objective trace with this prefix.

    verbose : boolean
        Print progress to the screen.

    Returns
    -------
    LinkInstances

    Example
    -------
    >>> instances = build_link_instances(aligned, partition, ratio=0.0, random_seed=0)
    >>> instances.layout("target-19", instances.indices("new")).shape[1]
    19
    """

    target = aligned_pair.target
    new_users = set(partition.new_users)
    if len(new_users) == 0:
        raise ValueError("The partition has no new users.")
    for u in new_users | set(partition.old_users):
        target.check_user(u)

    withhold_seed, negative_seed, sampling_seed, old_negative_seed = \
        [int(child.generate_state(1)[0]) for child in np.random.SeedSequence(random_seed).spawn(4)]

    if verbose == True:
        print("Link instances:  withholding new-user information at ratio " + str(ratio) + ".")
    withheld = withhold_information(target, new_users, ratio, random_seed=withhold_seed)
    withheld_pair = AlignedPair(withheld, aligned_pair.source, aligned_pair.anchors)

    positives = [_ordered_pair(u, v, new_users) for u, v in target.links()
                 if u in new_users or v in new_users]
    n = target.number_of_users
    number_of_other = n - len(new_users)
    number_of_candidates = (n * (n - 1) // 2 - number_of_other * (number_of_other - 1) // 2 -
                            len(positives))
    negatives = _sample_non_links(target, target.users, len(positives), number_of_candidates,
                                  lambda u, v: u in new_users or v in new_users,
                                  np.random.default_rng(negative_seed))
    negatives = [_ordered_pair(u, v, new_users) for u, v in negatives]

    rows = [(pair, 1, "new") for pair in positives] + [(pair, 0, "new") for pair in negatives]

    old_users = sorted(partition.old_users)
    if include_old == True and len(old_users) > 1:
        old_positives, old_negatives = _old_instances(target, old_users, old_negative_seed)
        rows.extend((pair, 1, "old") for pair in old_positives)
        rows.extend((pair, 0, "old") for pair in old_negatives)

    if include_sampled_old == True and len(old_users) > 1:
        if verbose == True:
            print("Link instances:  personalized sampling of " + str(len(old_users)) + " old users.")
        problem = build_sampling_problem(withheld, partition, theta=theta)
        distribution = optimize_sampling_distribution(problem, verbose=verbose)
        if sampling_diagnostics_prefix is not None:
            write_sampling_diagnostics(sampling_diagnostics_prefix, problem, distribution)
        sampled = sample_old_users(withheld.subnetwork(old_users), distribution.delta,
                                   rho=rho, random_seed=sampling_seed)
        if sampled.number_of_users > 1:
            sampled_positives, sampled_negatives = _old_instances(target, sampled.users, old_negative_seed)
            rows.extend((pair, 1, "old-sampled") for pair in sampled_positives)
            rows.extend((pair, 0, "old-sampled") for pair in sampled_negatives)

    if verbose == True:
        print("Link instances:  extracting features of " + str(len(rows)) + " instances.")

    cache = dict()
    features = np.zeros((len(rows), len(LAYOUTS["merged-39"])))
    for index, (pair, _, _) in enumerate(rows):
        if pair not in cache:
            cache[pair] = extract_link_features(withheld_pair, pair[0], pair[1], "merged-39").values
        features[index] = cache[pair]

    return(LinkInstances([pair for pair, _, _ in rows],
                         features,
                         [label for _, label, _ in rows],
                         [group for _, _, group in rows]))
