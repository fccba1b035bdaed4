import numpy as np
import networkx as nx


def structure_regularization_matrix(old_subnetwork):
    """
    Diagonal structure-maintenance matrix M of the old users' subnetwork.

    M_ii = min(N_i, min over neighbours j of N_j) where N_i is the degree of
    user i inside the subnetwork; isolated users get 0.

    Arguments
    ---------
    old_subnetwork : HeterogeneousNetwork
        Subnetwork induced by the old users.

    Returns
    -------
    Dense diagonal numpy matrix, rows and columns in ``old_subnetwork.users``
    order.

    Example
    -------
    >>> structure_regularization_matrix(single_link_network)
    array([[1., 0.],
           [0., 1.]])
    """

    graph = old_subnetwork.graph
    diagonal = np.zeros(old_subnetwork.number_of_users)
    for i, u in enumerate(old_subnetwork.users):
        degree = graph.degree(u)
        if degree == 0:
            continue
        diagonal[i] = min(degree, min(graph.degree(v) for v in graph.adj[u]))
    return(np.diag(diagonal))


def diversity_matrix(old_subnetwork):
    """
    Regularized diversity matrix N = I / (2n) + A / (2|S|) + M.

    I / (2n) is the averaged Simpson index term, A / (2|S|) the average link
    existence term over the adjacency matrix A of the n old users with |S|
    undirected links (dropped when there are no links), and M the structure
    regularization matrix.  N is exactly symmetric.

    Arguments
    ---------
    old_subnetwork : HeterogeneousNetwork
        Subnetwork induced by the old users.

    Returns
    -------
    Dense numpy matrix of shape (n, n).

    Example
    -------
    >>> diversity_matrix(single_link_network)
    array([[1.25, 0.5 ],
           [0.5 , 1.25]])
    """

    n = old_subnetwork.number_of_users
    if n == 0:
        raise ValueError("The old users' subnetwork is empty.")

    matrix = np.eye(n) / (2.0 * n)

    number_of_links = old_subnetwork.number_of_links
    if number_of_links > 0:
        adjacency = nx.to_numpy_array(old_subnetwork.graph, nodelist=list(old_subnetwork.users))
        matrix = matrix + adjacency / (2.0 * number_of_links)

    matrix = matrix + structure_regularization_matrix(old_subnetwork)

    return(matrix)
