import numpy as np

from sklearn.metrics.pairwise import cosine_similarity

from ..features import vector_statistics

AUXILIARY_CHANNELS = ("location", "time", "word")


def user_similarity(network, ui, uj):
    """
    Similarity of two users used by personalized sampling.

    S = (S_aux + S_social) / 2 where S_aux is the mean of the location, time
    and TF-IDF word cosine similarities and S_social the Jaccard coefficient
    of the neighbour sets.  Similarities over an empty operand are 0.

    Arguments
    ---------
    network : HeterogeneousNetwork
        Network holding both users.

    ui, uj : integer
        User ids (may coincide).

    Returns
    -------
    Float in [0, 1].

    Example
    -------
    >>> user_similarity(net, 3, 3)
    1.0
    """

    network.check_user(ui)
    network.check_user(uj)

    cosines = list()
    for channel in AUXILIARY_CHANNELS:
        _, cosine, _, _ = vector_statistics(network.channel_vector(channel, ui),
                                            network.channel_vector(channel, uj))
        cosines.append(cosine)
    auxiliary_similarity = sum(cosines) / 3.0

    neighbors_i = network.neighbors(ui)
    neighbors_j = network.neighbors(uj)
    union = neighbors_i | neighbors_j
    social_similarity = 0.0
    if len(union) > 0:
        social_similarity = len(neighbors_i & neighbors_j) / len(union)

    return(0.5 * (auxiliary_similarity + social_similarity))


def similarity_matrix(network, rows, columns):
    """
    Matrix of user_similarity between two user lists, computed block-wise on
    the sparse channel matrices of the network.
    """

    row_indices = [network.user_index(u) for u in rows]
    column_indices = [network.user_index(u) for u in columns]

    auxiliary_similarity = np.zeros((len(rows), len(columns)))
    for channel in AUXILIARY_CHANNELS:
        matrix = network.channel_matrix(channel)
        if matrix.shape[1] == 0:
            continue
        auxiliary_similarity += cosine_similarity(matrix[row_indices], matrix[column_indices])
    auxiliary_similarity /= 3.0

    adjacency = network.adjacency_matrix()
    degrees = np.asarray(adjacency.sum(axis=1)).ravel()
    intersection = (adjacency[row_indices] @ adjacency[column_indices].T).toarray()
    union = degrees[row_indices][:, np.newaxis] + degrees[column_indices][np.newaxis, :] - intersection
    social_similarity = np.divide(intersection, union, out=np.zeros_like(intersection), where=union > 0)

    return(np.clip(0.5 * (auxiliary_similarity + social_similarity), 0.0, 1.0))


def relevance_vector(network,
                     old_users,
                     new_users):
    """
    Relevance of every old user to the new users.

    s_i = (1 / |U_new|) * sum_j S(old_i, new_j).

    Arguments
    ---------
    network : HeterogeneousNetwork
        Target network (with withheld information when applicable).

    old_users : sequence of integers
        Old users; the output follows this order.

    new_users : iterable of integers
        New users.

    Returns
    -------
    Numpy array of length |old_users| with entries in [0, 1].

    Example
    -------
    >>> s = relevance_vector(target, sorted(partition.old_users), partition.new_users)
    """

    old_users = list(old_users)
    new_users = sorted(new_users)
    if len(new_users) == 0:
        raise ValueError("The set of new users is empty.")
    if len(old_users) == 0:
        raise ValueError("The set of old users is empty.")

    return(similarity_matrix(network, old_users, new_users).mean(axis=1))
