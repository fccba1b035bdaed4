import numpy as np
import networkx as nx

from .heterogeneous_network import AlignedPair


def sample_aligned_subnetworks(aligned_pair,
                               number_of_users=1000,
                               random_seed=None,
                               verbose=False):
    """
    Extract a fully aligned pair of subnetworks by breadth-first search.

    Starting from a random anchored target user, anchored users are collected
    in breadth-first order over the target social graph (restricted to
    anchored users).  When a component is exhausted the search restarts from
    another random anchored user.  The induced subnetworks of the collected
    users and of their source counterparts keep all events.

    Arguments
    ---------
    aligned_pair : AlignedPair
        Large aligned pair, e.g. two ingested real networks.

    number_of_users : integer
        Size of each of the two subnetworks.

    random_seed : integer
        Seed for the start users.

    verbose : boolean
        Print progress to the screen.

    Returns
    -------
    AlignedPair with anchor coverage 1.0.

    Example
    -------
    >>> subset = sample_aligned_subnetworks(aligned, number_of_users=1000, random_seed=0)
    """

    anchors = aligned_pair.anchors
    anchored = sorted(anchors.keys())
    if len(anchored) < number_of_users:
        raise ValueError("Only " + str(len(anchored)) + " anchored users are available, " +
                         str(number_of_users) + " requested.")

    anchored_graph = aligned_pair.target.graph.subgraph(anchored)

    random_generator = np.random.default_rng(random_seed)
    start_order = random_generator.permutation(len(anchored))

    collected = list()
    visited = set()
    for start_index in start_order:
        start = anchored[start_index]
        if start in visited:
            continue
        visited.add(start)
        collected.append(start)
        if len(collected) >= number_of_users:
            break
        for _, v in nx.bfs_edges(anchored_graph, start, sort_neighbors=sorted):
            if v in visited:
                continue
            visited.add(v)
            collected.append(v)
            if len(collected) >= number_of_users:
                break
        if len(collected) >= number_of_users:
            break

    target_users = collected[:number_of_users]
    source_users = [anchors[t] for t in target_users]

    if verbose == True:
        print("Aligned subnetworks:  collected " + str(len(target_users)) + " anchored users.")

    return(AlignedPair(aligned_pair.target.subnetwork(target_users),
                       aligned_pair.source.subnetwork(source_users),
                       {t: anchors[t] for t in target_users}))
