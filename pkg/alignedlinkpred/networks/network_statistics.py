import networkx as nx


def degree_histogram(network):
    """
    Exact social degree histogram.

    Arguments
    ---------
    network : HeterogeneousNetwork
        Input network.

    Returns
    -------
    List of (degree, count) pairs with non-zero count in descending degree
    order.  Isolated users appear as degree 0.

    Example
    -------
    >>> degree_histogram(triangle_network)
    [(2, 3)]
    """

    counts = nx.degree_histogram(network.graph)
    histogram = [(degree, count) for degree, count in enumerate(counts) if count > 0]
    return(sorted(histogram, reverse=True))


def network_statistics(network):
    """
    Summary counts of a heterogeneous network: users, social links, location,
    time and word events, distinct locations and distinct words.
    """

    statistics = {"users": network.number_of_users,
                  "social_links": network.number_of_links,
                  "location_events": 0,
                  "time_events": 0,
                  "word_events": 0}
    words = set()
    for u in network.users:
        statistics["location_events"] += len(network.location_events(u))
        statistics["time_events"] += len(network.time_events(u))
        statistics["word_events"] += len(network.word_events(u))
        words.update(network.word_events(u))
    statistics["locations"] = len(network.location_coordinates)
    statistics["words"] = len(words)

    return(statistics)
