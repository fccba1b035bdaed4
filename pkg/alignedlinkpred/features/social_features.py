import networkx as nx


def _check_pair(network, ui, uj):
    network.check_user(ui)
    network.check_user(uj)
    if ui == uj:
        raise ValueError("Pair features need two distinct users.")


def common_neighbors(network, ui, uj):
    """
    Number of shared social neighbours, |Γ(ui) ∩ Γ(uj)|.

    Arguments
    ---------
    network : HeterogeneousNetwork
        Network holding both users.

    ui, uj : integer
        Distinct user ids.

    Returns
    -------
    Non-negative integer.

    Example
    -------
    >>> common_neighbors(net, 1, 2)
    2
    """

    _check_pair(network, ui, uj)
    return(len(set(nx.common_neighbors(network.graph, ui, uj))))


def jaccard(network, ui, uj):
    """
    Jaccard coefficient of the two neighbour sets; 0 when both are empty.
    """

    _check_pair(network, ui, uj)
    if network.degree(ui) == 0 and network.degree(uj) == 0:
        return(0.0)
    _, _, coefficient = next(nx.jaccard_coefficient(network.graph, [(ui, uj)]))
    return(float(coefficient))


def adamic_adar(network, ui, uj):
    """
    Adamic/Adar measure: sum over common neighbours u_k of 1 / ln |Γ(u_k)|.

    Every common neighbour of two distinct users has degree at least 2, so
    each term is finite and positive.
    """

    _check_pair(network, ui, uj)
    _, _, index = next(nx.adamic_adar_index(network.graph, [(ui, uj)]))
    return(float(index))
