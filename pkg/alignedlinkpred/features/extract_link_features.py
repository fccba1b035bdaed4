import numpy as np

from .social_features import common_neighbors, jaccard, adamic_adar
from .auxiliary_features import spatial_features, temporal_features, text_features

FEATURE_NAMES = ("cn", "jc", "aa",
                 "location_inner", "location_cosine", "location_euclidean",
                 "location_cn", "location_jc", "geographic_distance_km",
                 "time_shared", "time_inner", "time_cosine", "time_euclidean", "time_extended_jc",
                 "word_shared", "word_inner", "word_cosine", "word_euclidean", "word_extended_jc")

NUMBER_OF_NETWORK_FEATURES = len(FEATURE_NAMES)

# Column indices of every layout inside the merged-39 vector.
LAYOUTS = {"target-19": tuple(range(0, 19)),
           "source-19": tuple(range(19, 38)),
           "merged-38": tuple(range(0, 38)),
           "merged-39": tuple(range(0, 39))}


def layout_feature_names(layout_id):
    if layout_id not in LAYOUTS:
        raise ValueError("Unknown feature layout " + str(layout_id) + ".")
    names = (["target_" + name for name in FEATURE_NAMES] +
             ["source_" + name for name in FEATURE_NAMES] + ["pseudo_label"])
    return([names[i] for i in LAYOUTS[layout_id]])


class FeatureVector(object):
    """
    Fixed-length feature vector tagged with its layout.

    Arguments
    ---------
    values : array-like
        Finite feature values.

    layout_id : string
        One of "target-19", "source-19", "merged-38", "merged-39".
    """

    def __init__(self, values, layout_id):
        if layout_id not in LAYOUTS:
            raise ValueError("Unknown feature layout " + str(layout_id) + ".")
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (len(LAYOUTS[layout_id]),):
            raise ValueError("Layout " + layout_id + " needs " + str(len(LAYOUTS[layout_id])) +
                             " values, got " + str(values.size) + ".")
        if not np.all(np.isfinite(values)):
            raise ValueError("Feature values must be finite.")
        self.values = values
        self.layout_id = layout_id

    def __len__(self):
        return(self.values.size)

    def __getitem__(self, index):
        return(self.values[index])

    def __repr__(self):
        return("FeatureVector(" + self.layout_id + ", " + np.array2string(self.values, precision=4) + ")")


def network_features(network, ui, uj):
    """
    The 19 per-network features of a user pair in the frozen order of
    FEATURE_NAMES: social (3), spatial (6), temporal (5), text (5).
    """

    values = [float(common_neighbors(network, ui, uj)),
              jaccard(network, ui, uj),
              adamic_adar(network, ui, uj)]
    values.extend(spatial_features(network, ui, uj))
    values.extend(temporal_features(network, ui, uj))
    values.extend(text_features(network, ui, uj))
    return(np.asarray(values, dtype=np.float64))


def pseudo_label(aligned_pair, ui, uj):
    """
    1 if both users are anchored and their source counterparts are linked,
    0 otherwise.

    Example
    -------
    >>> pseudo_label(aligned, 1, 2)
    1
    """

    si = aligned_pair.counterpart(ui)
    sj = aligned_pair.counterpart(uj)
    if si is None or sj is None:
        return(0)
    return(int(aligned_pair.source.has_link(si, sj)))


def extract_link_features(aligned_pair,
                          ui,
                          uj,
                          layout_id="merged-39"):
    """
    Feature vector of a candidate target link.

    The target block is computed on the target network, the source block on
    the anchored counterparts in the source network (zeros when either user is
    unanchored), and merged-39 appends the pseudo label.

    Arguments
    ---------
    aligned_pair : AlignedPair
        Target network (typically with withheld information) and source.

    ui, uj : integer
        Target user ids.

    layout_id : string
        One of "target-19", "source-19", "merged-38", "merged-39".

    Returns
    -------
    FeatureVector

    Example
    -------
    >>> vector = extract_link_features(aligned, 4, 17, layout_id="merged-39")
    >>> vector[38]
    1.0
    """

    if layout_id not in LAYOUTS:
        raise ValueError("Unknown feature layout " + str(layout_id) + ".")

    blocks = list()
    if layout_id != "source-19":
        blocks.append(network_features(aligned_pair.target, ui, uj))
    else:
        aligned_pair.target.check_user(ui)
        aligned_pair.target.check_user(uj)

    if layout_id != "target-19":
        si = aligned_pair.counterpart(ui)
        sj = aligned_pair.counterpart(uj)
        if si is None or sj is None:
            blocks.append(np.zeros(NUMBER_OF_NETWORK_FEATURES))
        else:
            blocks.append(network_features(aligned_pair.source, si, sj))

    if layout_id == "merged-39":
        blocks.append(np.asarray([pseudo_label(aligned_pair, ui, uj)], dtype=np.float64))

    return(FeatureVector(np.concatenate(blocks), layout_id))
