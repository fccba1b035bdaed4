import math

import numpy as np

from sklearn.metrics.pairwise import haversine_distances

EARTH_RADIUS_KM = 6371.0


def vector_statistics(x, y):
    """
    Inner product, cosine, Euclidean distance and extended Jaccard of two
    sparse non-negative vectors stored as dicts.
    """

    # Sorted keys keep every sum independent of argument order.
    inner = sum(x[key] * y[key] for key in sorted(set(x) & set(y)))

    squared_norm_x = sum(x[key] * x[key] for key in sorted(x))
    squared_norm_y = sum(y[key] * y[key] for key in sorted(y))

    cosine = 0.0
    if squared_norm_x > 0.0 and squared_norm_y > 0.0:
        cosine = min(1.0, inner / math.sqrt(squared_norm_x * squared_norm_y))

    squared_distance = 0.0
    for key in sorted(set(x) | set(y)):
        difference = x.get(key, 0.0) - y.get(key, 0.0)
        squared_distance += difference * difference

    denominator = squared_norm_x + squared_norm_y - inner
    extended_jaccard = 0.0
    if denominator > 0.0:
        extended_jaccard = min(1.0, inner / denominator)

    return(float(inner), float(cosine), math.sqrt(squared_distance), float(extended_jaccard))


def spatial_features(network, ui, uj):
    """
    Spatial distribution features of a user pair.

    Arguments
    ---------
    network : HeterogeneousNetwork
        Network holding both users.

    ui, uj : integer
        User ids.

    Returns
    -------
    List [inner product, cosine, Euclidean distance, shared locations,
    Jaccard of location sets, mean haversine distance in km over all pairs of
    visited locations].  All six are 0 when either user has no check-ins.

    Example
    -------
    >>> spatial_features(net, 1, 2)
    [2.0, 0.7071067811865475, 1.4142135623730951, 1.0, 0.5, 0.0]
    """

    x = network.channel_vector("location", ui)
    y = network.channel_vector("location", uj)
    if len(x) == 0 or len(y) == 0:
        return([0.0] * 6)

    inner, cosine, distance, _ = vector_statistics(x, y)

    locations_i = sorted(x)
    locations_j = sorted(y)
    shared = len(set(locations_i) & set(locations_j))
    jaccard = shared / len(set(locations_i) | set(locations_j))

    coordinates_i = np.radians([network.location_coordinate(k) for k in locations_i])
    coordinates_j = np.radians([network.location_coordinate(k) for k in locations_j])
    geographic_distance = EARTH_RADIUS_KM * haversine_distances(coordinates_i, coordinates_j).mean()

    return([inner, cosine, distance, float(shared), float(jaccard), float(geographic_distance)])


def temporal_features(network, ui, uj):
    """
    Temporal distribution features over the 24 hour-of-day slots: shared
    active slots, inner product, cosine, Euclidean distance and extended
    Jaccard.  All five are 0 when either user has no posts.
    """

    x = network.channel_vector("time", ui)
    y = network.channel_vector("time", uj)
    if len(x) == 0 or len(y) == 0:
        return([0.0] * 5)

    inner, cosine, distance, extended_jaccard = vector_statistics(x, y)
    shared = len(set(x) & set(y))

    return([float(shared), inner, cosine, distance, extended_jaccard])


def text_features(network, ui, uj):
    """
    Text usage features: number of shared words (unweighted), then inner
    product, cosine, Euclidean distance and extended Jaccard of the TF-IDF
    word vectors (idf = ln(|U| / df), one document per user).  All five are 0
    when either user has no words.
    """

    counts_i = network.channel_vector("word_count", ui)
    counts_j = network.channel_vector("word_count", uj)
    if len(counts_i) == 0 or len(counts_j) == 0:
        return([0.0] * 5)

    shared = len(set(counts_i) & set(counts_j))
    inner, cosine, distance, extended_jaccard = vector_statistics(
        network.channel_vector("word", ui), network.channel_vector("word", uj))

    return([float(shared), inner, cosine, distance, extended_jaccard])
