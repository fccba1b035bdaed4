from .heterogeneous_network import AlignedPair
from .network_io import read_anchors


def build_aligned_pair(target,
                       source,
                       anchors_file_name,
                       verbose=False):
    """
    Join a target and a source network through the anchor links in a file.

    Arguments
    ---------
    target : HeterogeneousNetwork
        Network in which links are predicted.

    source : HeterogeneousNetwork
        Aligned network.

    anchors_file_name : string
        File with one '<target-id> <source-id>' anchor per line.

    verbose : boolean
        Print the anchor coverage to the screen.

    Returns
    -------
    AlignedPair whose ``coverage`` attribute reports the fraction of anchored
    target users.

    Example
    -------
    >>> aligned = build_aligned_pair(target, source, "anchors.txt")
    >>> aligned.coverage
    1.0
    """

    anchors = read_anchors(anchors_file_name)
    aligned_pair = AlignedPair(target, source, anchors)

    if verbose == True:
        print("Aligned pair:  " + str(len(anchors)) + " anchors, coverage " +
              "{:.3f}".format(aligned_pair.coverage) + ".")

    return(aligned_pair)


def reverse_aligned_pair(aligned_pair):
    """
    Swap the roles of the target and the source network.

    Arguments
    ---------
    aligned_pair : AlignedPair
        Input pair.

    Returns
    -------
    AlignedPair with the source as target and the inverted anchor map.
    """

    inverse = {s: t for t, s in aligned_pair.anchors.items()}
    return(AlignedPair(aligned_pair.source, aligned_pair.target, inverse))
